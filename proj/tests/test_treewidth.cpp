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

#include "doctest.h"
#include "rotunda/catalog.hpp"
#include "rotunda/correspondence.hpp"

using namespace rotunda;

namespace {

SimpleGraph diamond() {
  SimpleGraph g = SimpleGraph::with_vertex_count(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return g;
}

TreeDecomposition single_node(const Matroid& m) {
  return TreeDecomposition{Tree::single_node(), {m.elements()}};
}

// Reference width: the displayed formula evaluated with no shortcuts.
int width_by_definition(const Matroid& m, const TreeDecomposition& td) {
  int worst = 0;
  for (int t = 0; t < td.tree.nodes; ++t) {
    std::vector<int> comp = td.tree.components_without(t);
    int d = 0;
    for (int c : comp) d = std::max(d, c + 1);
    std::vector<ElementSet> unions(d);
    for (int v = 0; v < td.tree.nodes; ++v) {
      if (comp[v] >= 0) unions[comp[v]] |= td.bags[v];
    }
    long long total = -static_cast<long long>(d - 1) * m.rank();
    for (int i = 0; i < d; ++i) {
      ElementSet rest = td.bags[t];
      for (int k = 0; k < d; ++k) {
        if (k != i) rest |= unions[k];
      }
      total += m.rank(rest);
    }
    worst = std::max(worst, static_cast<int>(total));
  }
  return worst;
}

// Reference tree-width: plain enumeration, no pruning. Tiny inputs only.
int treewidth_by_enumeration(const Matroid& m) {
  int n = m.size();
  int best = m.rank();
  std::vector<int> elements = m.elements().to_vector();
  for (int k = 2; k <= n; ++k) {
    for (const Tree& tree : all_labeled_trees(k)) {
      std::vector<int> assignment(n, 0);
      while (true) {
        TreeDecomposition td;
        td.tree = tree;
        td.bags.assign(k, ElementSet());
        for (int i = 0; i < n; ++i) {
          td.bags[assignment[i]] = td.bags[assignment[i]].with(elements[i]);
        }
        best = std::min(best, width_by_definition(m, td));
        int pos = n - 1;
        while (pos >= 0 && assignment[pos] == k - 1) assignment[pos--] = 0;
        if (pos < 0) break;
        ++assignment[pos];
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("node width of a single-node decomposition is the rank") {
  for (const Matroid& m : {u36(), pabx(), fano()}) {
    TreeDecomposition td = single_node(m);
    CHECK(node_width(m, td, 0) == m.rank());
    CHECK(width(m, td).width == m.rank());
  }
}

TEST_CASE("leaf node width is the bag rank") {
  Matroid m = graphic_matroid(diamond());
  RotundaTreesResult trees = rotunda_trees(m);
  TreeDecomposition td =
      decomposition_from_rotunda_tree(trees.graph, trees.trees[0]);
  CHECK(node_width(m, td, 0) == 2);
  CHECK(node_width(m, td, 1) == 2);
  CHECK(width(m, td).width == 2);
}

TEST_CASE("two coloops in separate bags have width one") {
  Matroid m = Matroid::graphic(3, {{0, 1}, {1, 2}});
  TreeDecomposition td{Tree{2, {{0, 1}}},
                       {ElementSet{0}, ElementSet{1}}};
  WidthReport report = width(m, td);
  CHECK(report.width == 1);
  CHECK(report.node_widths == std::vector<int>{1, 1});
}

TEST_CASE("width validates coverage") {
  Matroid m = u36();
  TreeDecomposition td{Tree{2, {{0, 1}}},
                       {ElementSet{0, 1}, ElementSet{2}}};
  CHECK_THROWS_AS(width(m, td), InputError);
  CHECK_THROWS_AS(node_width(m, single_node(m), 3), InputError);
}

TEST_CASE("node width agrees with the definitional formula") {
  Matroid m = graphic_matroid(diamond());
  for (const Tree& tree : all_labeled_trees(3)) {
    TreeDecomposition td;
    td.tree = tree;
    td.bags = {ElementSet{0, 1, 2}, ElementSet{2, 3}, ElementSet{3, 4}};
    WidthReport report = width(m, td);
    CHECK(report.width == width_by_definition(m, td));
  }
}

TEST_CASE("brute force treewidth on the fixtures") {
  CHECK(brute_force_treewidth(u36()) == 3);
  CHECK(brute_force_treewidth(graphic_matroid(SimpleGraph::complete(4))) ==
        3);
  CHECK(brute_force_treewidth(graphic_matroid(diamond())) == 2);
  CHECK(brute_force_treewidth(graphic_matroid(SimpleGraph::path(4))) == 1);
  CHECK(brute_force_treewidth(Matroid::uniform(0, 2)) == 0);
  CHECK_THROWS_AS(brute_force_treewidth(fano()), BoundError);
}

TEST_CASE("pruned oracle equals plain enumeration on small matroids") {
  for (const Matroid& m :
       {Matroid::uniform(2, 4), graphic_matroid(SimpleGraph::path(4)),
        graphic_matroid(SimpleGraph::complete(3)),
        Matroid::graphic(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})}) {
    CHECK(brute_force_treewidth(m) == treewidth_by_enumeration(m));
  }
}

TEST_CASE("rotunda treewidth") {
  CHECK(rotunda_treewidth(graphic_matroid(diamond())) == 2);
  for (int n = 3; n <= 5; ++n) {
    CHECK(rotunda_treewidth(graphic_matroid(SimpleGraph::complete(n))) ==
          n - 1);
  }
  CHECK(rotunda_treewidth(fano()) == 3);
  CHECK_THROWS_AS(rotunda_treewidth(u36()), HypothesisError);
}

TEST_CASE("round flat lower bound") {
  CHECK(round_flat_lower_bound(u36()) == 3);
  Matroid path = Matroid::graphic(3, {{0, 1}, {1, 2}});
  CHECK(round_flat_lower_bound(path) == 1);
  CHECK(round_flat_lower_bound(pabx()) == 3);
  CHECK(round_flat_lower_bound(fano()) == 3);
}

TEST_CASE("strictness helpers") {
  Matroid m = u36();
  TreeDecomposition strict{Tree{2, {{0, 1}}},
                           {ElementSet{0, 1, 2}, ElementSet{3, 4, 5}}};
  CHECK(strict.covers(m.elements()));
  CHECK(strict.is_strict(m.elements()));
  TreeDecomposition loose{Tree{2, {{0, 1}}},
                          {ElementSet{0, 1, 2, 3}, ElementSet{3, 4, 5}}};
  CHECK(loose.covers(m.elements()));
  CHECK(!loose.is_strict(m.elements()));
}
