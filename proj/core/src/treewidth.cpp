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

#include "rotunda/treewidth.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include "parallel.hpp"
#include "rotunda/classification.hpp"
#include "rotunda/roundness.hpp"

namespace rotunda {

bool TreeDecomposition::covers(ElementSet domain) const {
  ElementSet all;
  for (ElementSet bag : bags) all = all | bag;
  return domain.subset_of(all);
}

bool TreeDecomposition::is_strict(ElementSet domain) const {
  for (int e : domain) {
    int holders = 0;
    for (ElementSet bag : bags) {
      if (bag.contains(e)) ++holders;
    }
    if (holders != 1) return false;
  }
  return true;
}

int node_width(const Matroid& m, const TreeDecomposition& td, int node) {
  if (node < 0 || node >= td.tree.nodes) {
    throw InputError("node_width: node index out of range");
  }
  std::vector<int> comp = td.tree.components_without(node);
  int d = 0;
  for (int c : comp) d = std::max(d, c + 1);
  std::vector<ElementSet> branch_union(d);
  for (int v = 0; v < td.tree.nodes; ++v) {
    if (comp[v] >= 0) branch_union[comp[v]] |= td.bags[v];
  }
  int r_m = m.rank();
  // sum_i r(bag ∪ union of the other branches) - (d-1) r(M); an isolated
  // node (d = 0) evaluates literally to r(M)
  long long total = 0;
  for (int i = 0; i < d; ++i) {
    ElementSet rest = td.bags[node];
    for (int k = 0; k < d; ++k) {
      if (k != i) rest |= branch_union[k];
    }
    total += m.rank(rest);
  }
  total -= static_cast<long long>(d - 1) * r_m;
  return static_cast<int>(total);
}

WidthReport width(const Matroid& m, const TreeDecomposition& td) {
  if (!td.covers(m.elements())) {
    throw InputError("width: some element appears in no bag");
  }
  WidthReport report;
  report.width = 0;
  for (int t = 0; t < td.tree.nodes; ++t) {
    report.node_widths.push_back(node_width(m, td, t));
    report.width = std::max(report.width, report.node_widths.back());
  }
  return report;
}

namespace {

// Precomputed per-tree structure for the oracle: for every node, the node
// sets of each neighbour branch.
struct TreeShape {
  Tree tree;
  std::vector<std::vector<ElementSet>> branch_nodes;  // [node][branch]
  std::vector<int> degree;
};

TreeShape shape_of(const Tree& tree) {
  TreeShape shape;
  shape.tree = tree;
  shape.branch_nodes.resize(tree.nodes);
  shape.degree.resize(tree.nodes, 0);
  for (int t = 0; t < tree.nodes; ++t) {
    std::vector<int> comp = tree.components_without(t);
    int d = 0;
    for (int c : comp) d = std::max(d, c + 1);
    shape.degree[t] = d;
    shape.branch_nodes[t].assign(d, ElementSet());
    for (int v = 0; v < tree.nodes; ++v) {
      if (comp[v] >= 0) {
        shape.branch_nodes[t][comp[v]] =
            shape.branch_nodes[t][comp[v]].with(v);
      }
    }
  }
  return shape;
}

// Width of a (partial) strict assignment, stopping early at `stop_at`.
// Node widths are monotone in the bags, so a partial width at or above
// the best known width can be pruned.
int partial_width(const Matroid& m, const TreeShape& shape,
                  const std::vector<ElementSet>& bags, int r_m,
                  int stop_at) {
  int worst = 0;
  for (int t = 0; t < shape.tree.nodes; ++t) {
    int d = shape.degree[t];
    std::vector<ElementSet> branch(d);
    for (int i = 0; i < d; ++i) {
      ElementSet u;
      for (int v : shape.branch_nodes[t][i]) u |= bags[v];
      branch[i] = u;
    }
    long long total = 0;
    for (int i = 0; i < d; ++i) {
      ElementSet rest = bags[t];
      for (int k = 0; k < d; ++k) {
        if (k != i) rest |= branch[k];
      }
      total += m.rank(rest);
    }
    total -= static_cast<long long>(d - 1) * r_m;
    worst = std::max(worst, static_cast<int>(total));
    if (worst >= stop_at) return worst;
  }
  return worst;
}

void assign_elements(const Matroid& m, const TreeShape& shape,
                     const std::vector<int>& elements, std::size_t index,
                     std::vector<ElementSet>& bags, int r_m,
                     std::atomic<int>& best) {
  int bound = best.load();
  int w = partial_width(m, shape, bags, r_m, bound);
  if (w >= bound) return;
  if (index == elements.size()) {
    int current = best.load();
    while (w < current && !best.compare_exchange_weak(current, w)) {
    }
    return;
  }
  int e = elements[index];
  for (int node = 0; node < shape.tree.nodes; ++node) {
    bags[node] = bags[node].with(e);
    assign_elements(m, shape, elements, index + 1, bags, r_m, best);
    bags[node] = bags[node].without(e);
  }
}

}  // namespace

int brute_force_treewidth(const Matroid& m) {
  int n = m.size();
  if (n > 6) {
    throw BoundError("brute_force_treewidth: hard-bounded to 6 elements");
  }
  int r_m = m.rank();
  if (n == 0 || r_m == 0) return 0;

  // memoised per representation + domain; the key keeps the
  // representation alive so pointers stay unique
  using MemoKey = std::pair<std::shared_ptr<const detail::MatroidImpl>,
                            std::uint64_t>;
  static std::mutex memo_mu;
  static std::map<MemoKey, int> memo;
  MemoKey key{m.impl_ptr(), m.elements().bits()};
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  // The single-node decomposition has width r(M); only search below it.
  std::atomic<int> best{r_m};
  std::vector<int> elements = m.elements().to_vector();

  std::vector<Tree> trees;
  for (int k = 2; k <= n; ++k) {
    std::vector<Tree> level = all_labeled_trees(k);
    trees.insert(trees.end(), level.begin(), level.end());
  }
  detail::parallel_for_index(
      static_cast<int>(trees.size()), 0, [&](int idx) {
        TreeShape shape = shape_of(trees[idx]);
        std::vector<ElementSet> bags(shape.tree.nodes);
        assign_elements(m, shape, elements, 0, bags, r_m, best);
      });
  int result = best.load();
  std::lock_guard<std::mutex> lock(memo_mu);
  memo[key] = result;
  return result;
}

int rotunda_treewidth(const Matroid& m) {
  if (!m.is_connected()) {
    throw HypothesisError("rotunda_treewidth: matroid is disconnected");
  }
  RotundaTreesResult result = rotunda_trees(m);
  int value = 0;
  for (const Flat& f : result.graph.nodes) value = std::max(value, f.rank);
  TreeDecomposition td =
      decomposition_from_rotunda_tree(result.graph, result.trees.front());
  WidthReport report = width(m, td);
  if (report.width != value) {
    throw Error("rotunda_treewidth: rotunda-tree width " +
                std::to_string(report.width) +
                " differs from the maximum rotunda rank " +
                std::to_string(value));
  }
  return value;
}

int round_flat_lower_bound(const Matroid& m) {
  int bound = 0;
  for (const Flat& f : round_flats(m)) bound = std::max(bound, f.rank);
  return bound;
}

TreeDecomposition decomposition_from_rotunda_tree(const RotundaGraph& graph,
                                                  const Tree& tree) {
  TreeDecomposition td;
  td.tree = tree;
  for (const Flat& f : graph.nodes) td.bags.push_back(f.elements);
  return td;
}

}  // namespace rotunda
