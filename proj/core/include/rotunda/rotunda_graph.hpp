// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROTUNDA_ROTUNDA_GRAPH_HPP
#define ROTUNDA_ROTUNDA_GRAPH_HPP

#include <map>
#include <string>
#include <vector>

#include "rotunda/matroid.hpp"
#include "rotunda/modularity.hpp"
#include "rotunda/tree.hpp"

namespace rotunda {

/// An edge weighting on rotunda intersections: sigma(∅) = 0 and strictly
/// monotone on nested members of the intersection domain. Rank and
/// cardinality are the built-in legitimate choices; custom tables are
/// validated against the domain at use.
class LegitimateWeighting {
 public:
  static LegitimateWeighting rank();
  static LegitimateWeighting cardinality();
  static LegitimateWeighting custom(std::map<ElementSet, int> table);

  int operator()(const Matroid& m, ElementSet intersection) const;
  const std::string& kind_name() const { return kind_name_; }

  /// Checks legitimacy over {∅} ∪ {R ∩ R'} for the given rotunda list;
  /// throws HypothesisError on violation.
  void validate(const Matroid& m, const std::vector<Flat>& rotunda) const;

 private:
  enum class Kind { Rank, Cardinality, Custom };
  Kind kind_ = Kind::Rank;
  std::string kind_name_ = "rank";
  std::map<ElementSet, int> table_;
};

/// The rotunda graph: nodes are the rotunda; an edge joins two rotunda with
/// non-empty intersection when a modular cover (F1, F2) certifies it, i.e.
/// R_i ⊆ F_i and F1 ∩ F2 = R1 ∩ R2. The first certificate in canonical
/// flat order is stored on the edge.
struct RotundaGraph {
  struct Edge {
    int a = 0, b = 0;
    int weight = 0;
    ModularCover cover;  // cover.first contains node a, cover.second node b
  };
  std::vector<Flat> nodes;
  std::vector<Edge> edges;  // a < b, sorted

  std::vector<std::pair<int, int>> edge_list() const;
  std::vector<int> edge_weights() const;
};

/// Requires M supersolvable and saturated (the rotunda graph is only
/// defined there); throws HypothesisError naming the failing condition.
RotundaGraph rotunda_graph(const Matroid& m);
RotundaGraph rotunda_graph(const Matroid& m,
                           const LegitimateWeighting& sigma);

/// Running-intersection check: bags must be a bijection onto the rotunda
/// (HypothesisError otherwise); true when every element's bag set induces
/// a subtree.
bool is_rotunda_tree(const Matroid& m, const Tree& tree,
                     const std::vector<ElementSet>& bags);

struct RotundaTreesResult {
  RotundaGraph graph;
  /// Trees over the node indices of `graph`; the bag of node i is
  /// graph.nodes[i].elements.
  std::vector<Tree> trees;
  bool exhaustive = true;
};

/// All rotunda trees of a connected supersolvable saturated matroid,
/// obtained by filtering the spanning trees of R(M) and checked against
/// the maximum-weight characterisation. Beyond `rotunda_enum_bound` nodes
/// only the deterministic maximum-weight tree is produced.
RotundaTreesResult rotunda_trees(const Matroid& m,
                                 const LegitimateWeighting& sigma,
                                 int rotunda_enum_bound = 9);
RotundaTreesResult rotunda_trees(const Matroid& m);

/// The modular cover induced by a rotunda-tree edge: F_i is the union of
/// bags on u_i's side. Verifies that both sides are modular flats and that
/// F1 ∩ F2 equals the intersection of the endpoint bags; failures indicate
/// a bug or a non-rotunda-tree input and raise Error.
ModularCover modular_cover_of_tree_edge(const Matroid& m,
                                        const RotundaGraph& graph,
                                        const Tree& tree, int edge_index);

}  // namespace rotunda

#endif  // ROTUNDA_ROTUNDA_GRAPH_HPP
