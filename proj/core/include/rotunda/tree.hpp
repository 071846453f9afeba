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

#ifndef ROTUNDA_TREE_HPP
#define ROTUNDA_TREE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rotunda/element_set.hpp"

namespace rotunda {

/// A labeled tree on nodes 0..nodes-1. Edges are stored as (u,v) with u < v,
/// sorted, so equal trees compare equal.
struct Tree {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;

  static Tree single_node() { return Tree{1, {}}; }
  static Tree from_prufer(const std::vector<int>& sequence, int n);

  /// Neighbor bitmask per node.
  std::vector<ElementSet> adjacency() const;
  int degree(int node) const;

  /// True when the given non-empty node subset induces a connected subgraph.
  bool induces_subtree(ElementSet node_subset) const;

  /// Component index per node after deleting `removed` (that node gets -1).
  std::vector<int> components_without(int removed) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.nodes == b.nodes && a.edges == b.edges;
  }
  friend bool operator<(const Tree& a, const Tree& b) {
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    return a.edges < b.edges;
  }
};

/// All labeled trees on n nodes via Prüfer sequences (n^(n-2) trees).
std::vector<Tree> all_labeled_trees(int n);

/// All spanning trees of the host graph, each as a bitmask over the host's
/// edge indices. Recursive include/exclude with connectivity pruning.
/// Empty when the host is disconnected. A host with one node has the empty
/// tree (mask 0).
std::vector<std::uint64_t> enumerate_spanning_trees(
    int node_count, const std::vector<std::pair<int, int>>& edges);

/// Deterministic maximum-weight spanning tree: Kruskal over edges ordered by
/// (weight descending, edge index ascending). Throws InputError when the
/// host is disconnected.
std::uint64_t max_weight_spanning_tree(
    int node_count, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& weights);

/// Total weight of an edge mask.
long long tree_weight(std::uint64_t edge_mask,
                      const std::vector<int>& weights);

/// Builds a Tree from a host edge mask.
Tree tree_from_edge_mask(int node_count,
                         const std::vector<std::pair<int, int>>& edges,
                         std::uint64_t mask);

}  // namespace rotunda

#endif  // ROTUNDA_TREE_HPP
