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

#include "rotunda/tree.hpp"

#include <algorithm>
#include <numeric>

#include "rotunda/errors.hpp"

namespace rotunda {

Tree Tree::from_prufer(const std::vector<int>& sequence, int n) {
  Tree t;
  t.nodes = n;
  if (n <= 1) return t;
  std::vector<int> degree(n, 1);
  for (int v : sequence) degree[v]++;
  std::vector<std::pair<int, int>> edges;
  std::uint64_t leaves = 0;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves |= (std::uint64_t{1} << v);
  }
  for (int v : sequence) {
    int leaf = std::countr_zero(leaves);
    leaves &= leaves - 1;
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1) leaves |= (std::uint64_t{1} << v);
  }
  int a = std::countr_zero(leaves);
  leaves &= leaves - 1;
  int b = std::countr_zero(leaves);
  edges.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(edges.begin(), edges.end());
  t.edges = std::move(edges);
  return t;
}

std::vector<ElementSet> Tree::adjacency() const {
  std::vector<ElementSet> adj(nodes);
  for (auto [u, v] : edges) {
    adj[u] = adj[u].with(v);
    adj[v] = adj[v].with(u);
  }
  return adj;
}

int Tree::degree(int node) const {
  int d = 0;
  for (auto [u, v] : edges) {
    if (u == node || v == node) ++d;
  }
  return d;
}

bool Tree::induces_subtree(ElementSet node_subset) const {
  if (node_subset.is_empty()) return false;
  auto adj = adjacency();
  int start = node_subset.lowest();
  ElementSet reached = ElementSet::single(start);
  ElementSet frontier = reached;
  while (!frontier.is_empty()) {
    ElementSet next;
    for (int v : frontier) next = next | (adj[v] & node_subset);
    frontier = next - reached;
    reached = reached | next;
  }
  return reached == node_subset;
}

std::vector<int> Tree::components_without(int removed) const {
  std::vector<int> comp(nodes, -1);
  auto adj = adjacency();
  int next_id = 0;
  for (int s = 0; s < nodes; ++s) {
    if (s == removed || comp[s] >= 0) continue;
    // BFS from s avoiding the removed node
    std::vector<int> queue = {s};
    comp[s] = next_id;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : adj[v]) {
        if (w == removed || comp[w] >= 0) continue;
        comp[w] = next_id;
        queue.push_back(w);
      }
    }
    ++next_id;
  }
  return comp;
}

std::vector<Tree> all_labeled_trees(int n) {
  std::vector<Tree> out;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(Tree::single_node());
    return out;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    out.push_back(Tree::from_prufer(seq, n));
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[i] == n - 1) {
      seq[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool can_still_connect(int node_count,
                       const std::vector<std::pair<int, int>>& edges,
                       const UnionFind& uf_state, std::size_t from_index) {
  UnionFind uf = uf_state;
  int merges = 0;
  for (std::size_t i = from_index; i < edges.size(); ++i) {
    if (uf.unite(edges[i].first, edges[i].second)) ++merges;
  }
  int roots = 0;
  for (int v = 0; v < node_count; ++v) {
    if (uf.find(v) == v) ++roots;
  }
  return roots == 1;
}

void spanning_tree_search(int node_count,
                          const std::vector<std::pair<int, int>>& edges,
                          std::size_t index, int chosen_count,
                          std::uint64_t chosen_mask, UnionFind uf,
                          std::vector<std::uint64_t>& out) {
  if (chosen_count == node_count - 1) {
    out.push_back(chosen_mask);
    return;
  }
  if (index >= edges.size()) return;
  if (!can_still_connect(node_count, edges, uf, index)) return;
  auto [u, v] = edges[index];
  UnionFind with_edge = uf;
  if (with_edge.unite(u, v)) {
    spanning_tree_search(node_count, edges, index + 1, chosen_count + 1,
                         chosen_mask | (std::uint64_t{1} << index), with_edge,
                         out);
  }
  spanning_tree_search(node_count, edges, index + 1, chosen_count,
                       chosen_mask, uf, out);
}

}  // namespace

std::vector<std::uint64_t> enumerate_spanning_trees(
    int node_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint64_t> out;
  if (node_count <= 0) return out;
  if (node_count == 1) {
    out.push_back(0);
    return out;
  }
  spanning_tree_search(node_count, edges, 0, 0, 0, UnionFind(node_count),
                       out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t max_weight_spanning_tree(
    int node_count, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& weights) {
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });
  UnionFind uf(node_count);
  std::uint64_t mask = 0;
  int picked = 0;
  for (int idx : order) {
    if (uf.unite(edges[idx].first, edges[idx].second)) {
      mask |= (std::uint64_t{1} << idx);
      ++picked;
    }
  }
  if (picked != node_count - 1) {
    throw InputError("max_weight_spanning_tree: host graph is disconnected");
  }
  return mask;
}

long long tree_weight(std::uint64_t edge_mask,
                      const std::vector<int>& weights) {
  long long total = 0;
  while (edge_mask) {
    total += weights[std::countr_zero(edge_mask)];
    edge_mask &= edge_mask - 1;
  }
  return total;
}

Tree tree_from_edge_mask(int node_count,
                         const std::vector<std::pair<int, int>>& edges,
                         std::uint64_t mask) {
  Tree t;
  t.nodes = node_count;
  while (mask) {
    t.edges.push_back(edges[std::countr_zero(mask)]);
    mask &= mask - 1;
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

}  // namespace rotunda
