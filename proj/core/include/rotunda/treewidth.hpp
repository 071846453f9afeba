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

#ifndef ROTUNDA_TREEWIDTH_HPP
#define ROTUNDA_TREEWIDTH_HPP

#include <vector>

#include "rotunda/matroid.hpp"
#include "rotunda/rotunda_graph.hpp"
#include "rotunda/tree.hpp"

namespace rotunda {

/// A tree together with one bag of elements per node. Every element must
/// appear in at least one bag; in a strict decomposition, exactly one.
struct TreeDecomposition {
  Tree tree;
  std::vector<ElementSet> bags;

  bool covers(ElementSet domain) const;
  bool is_strict(ElementSet domain) const;
};

struct WidthReport {
  std::vector<int> node_widths;
  int width = 0;
};

/// The rank-based node width: with T_1..T_d the components of T - t and
/// F_i the union of their bags,
///   sum_i r(bag(t) ∪ union of the other F_k)  -  (d-1) r(M).
/// An isolated node evaluates literally to r(M).
int node_width(const Matroid& m, const TreeDecomposition& td, int node);

/// All node widths and their maximum. Throws InputError when some element
/// is in no bag.
WidthReport width(const Matroid& m, const TreeDecomposition& td);

/// Exact tree-width by exhausting strict decompositions over all labeled
/// trees with 1..|E| nodes (Prüfer enumeration, empty bags allowed), with
/// monotone pruning. Hard-bounded to |E| <= 6.
int brute_force_treewidth(const Matroid& m);

/// max { r(R) : R rotunda } for a connected supersolvable saturated
/// matroid; also builds one rotunda tree and verifies its width equals the
/// returned value.
int rotunda_treewidth(const Matroid& m);

/// max { r(F) : F round flat }: a lower bound for the tree-width via minor
/// monotonicity.
int round_flat_lower_bound(const Matroid& m);

/// The decomposition whose bags are the rotunda of the given tree's nodes.
TreeDecomposition decomposition_from_rotunda_tree(const RotundaGraph& graph,
                                                  const Tree& tree);

}  // namespace rotunda

#endif  // ROTUNDA_TREEWIDTH_HPP
