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

#ifndef ROTUNDA_GRAPH_HPP
#define ROTUNDA_GRAPH_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotunda/element_set.hpp"
#include "rotunda/tree.hpp"

namespace rotunda {

/// Vertex subsets reuse the 64-bit set type.
using VertexSet = ElementSet;

/// An undirected simple graph on at most 64 labeled vertices.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> vertex_labels);
  static SimpleGraph with_vertex_count(int n);
  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);

  int add_vertex(const std::string& label);
  void add_edge(int u, int v);
  void add_edge(const std::string& u, const std::string& v);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const;
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet vertices() const {
    return VertexSet::full(vertex_count());
  }

  const std::string& vertex_label(int v) const { return labels_[v]; }
  int vertex_by_label(const std::string& label) const;
  std::string label_set(VertexSet vs) const;

  /// Edges as (u,v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool is_clique(VertexSet vs) const;
  bool is_connected() const;
  /// Connected with no cut-vertex. Single vertices and edges qualify.
  bool is_two_connected() const;
  std::vector<int> cut_vertices() const;
  /// Vertex sets of the connected components, sorted.
  std::vector<VertexSet> components() const;
  /// Vertices reachable from `start` while avoiding `forbidden`.
  VertexSet reachable(VertexSet start, VertexSet forbidden) const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
  std::string name_;
};

/// Outcome of the chordality test: a perfect elimination order on success,
/// an induced cycle with at least four vertices otherwise.
struct ChordalityCertificate {
  bool chordal = false;
  std::vector<int> elimination_order;
  std::vector<int> induced_cycle;
};

/// Simplicial-vertex elimination.
ChordalityCertificate is_chordal(const SimpleGraph& g);

/// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), canonically
/// ordered by (size, sorted vertex labels). Refuses graphs with more than
/// `vertex_bound` vertices.
std::vector<VertexSet> maximal_cliques(const SimpleGraph& g,
                                       int vertex_bound = 24);

/// All cliques including the empty set and singletons.
std::vector<VertexSet> all_cliques(const SimpleGraph& g,
                                   int vertex_bound = 24);

/// True when removing C1∩C2 disconnects C1-C2 from C2-C1 (and the
/// intersection is non-empty).
bool is_separating_pair(const SimpleGraph& g, VertexSet c1, VertexSet c2);

/// Weight of a clique intersection; must behave like a legitimate
/// weighting over the intersection domain.
using CliqueWeighting = std::function<int(VertexSet)>;
CliqueWeighting clique_cardinality_weighting();

/// Checks sigma(∅)=0 and strict monotonicity on nested members of the
/// intersection domain; throws HypothesisError on violation.
void validate_clique_weighting(const std::vector<VertexSet>& cliques,
                               const CliqueWeighting& sigma);

/// Maximal cliques plus every intersecting pair, flagged as separating or
/// not. The reduced clique graph keeps only the separating pairs.
struct ReducedCliqueGraph {
  struct Pair {
    int a = 0, b = 0;
    int weight = 0;
    bool separating = false;
  };
  std::vector<VertexSet> cliques;
  std::vector<Pair> pairs;

  /// Separating pairs only: the reduced-clique-graph edge list, sorted.
  std::vector<std::pair<int, int>> edge_list() const;
  std::vector<int> edge_weights() const;
};

ReducedCliqueGraph reduced_clique_graph(const SimpleGraph& g);
ReducedCliqueGraph reduced_clique_graph(const SimpleGraph& g,
                                        const CliqueWeighting& sigma);

/// Clique trees of a connected chordal graph, as trees over the canonical
/// clique indices of reduced_clique_graph(g).
struct CliqueTreesResult {
  ReducedCliqueGraph rcg;
  std::vector<Tree> trees;
  /// False when the clique count exceeded the enumeration bound and only a
  /// single maximum-weight tree was produced.
  bool exhaustive = true;
};

CliqueTreesResult clique_trees(const SimpleGraph& g,
                               const CliqueWeighting& sigma,
                               int clique_enum_bound = 9);
CliqueTreesResult clique_trees(const SimpleGraph& g);

/// Width of an optimal tree-decomposition of a chordal graph, reported in
/// the bag-size convention: the maximum clique cardinality, which is one
/// more than the usual graph tree-width.
int graph_tree_width(const SimpleGraph& g);

}  // namespace rotunda

#endif  // ROTUNDA_GRAPH_HPP
