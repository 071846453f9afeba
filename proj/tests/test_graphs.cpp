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

#include "rotunda/graph.hpp"

#include <set>

#include "doctest.h"
#include "rotunda/catalog.hpp"
#include "rotunda/errors.hpp"

using namespace rotunda;

namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g = SimpleGraph::with_vertex_count(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph diamond() {
  SimpleGraph g = SimpleGraph::with_vertex_count(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return g;
}

bool vertex_list_is_induced_cycle(const SimpleGraph& g,
                                  const std::vector<int>& cycle) {
  int k = static_cast<int>(cycle.size());
  if (k < 4) return false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("graph basics") {
  SimpleGraph g({"a", "b", "c"});
  g.add_edge("a", "b");
  CHECK(g.adjacent(0, 1));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
  CHECK_THROWS_AS(g.add_edge("a", "zz"), InputError);
  CHECK_THROWS_AS(SimpleGraph({"x", "x"}), InputError);
  CHECK(!g.is_connected());
  g.add_edge("b", "c");
  CHECK(g.is_connected());
  CHECK(g.cut_vertices() == std::vector<int>{1});
  CHECK(!g.is_two_connected());
}

TEST_CASE("chordality recognition") {
  CHECK(!is_chordal(cycle(4)).chordal);
  CHECK(!is_chordal(cycle(5)).chordal);
  CHECK(is_chordal(SimpleGraph::path(5)).chordal);
  CHECK(is_chordal(SimpleGraph::complete(5)).chordal);
  CHECK(is_chordal(diamond()).chordal);
  CHECK(is_chordal(SimpleGraph::with_vertex_count(0)).chordal);

  // the elimination order is perfect: each vertex's later neighbours
  // form a clique
  auto cert = is_chordal(diamond());
  REQUIRE(cert.elimination_order.size() == 4);
  VertexSet remaining = diamond().vertices();
  for (int v : cert.elimination_order) {
    CHECK(diamond().is_clique(diamond().neighbors(v) & remaining.without(v)));
    remaining = remaining.without(v);
  }
}

TEST_CASE("non-chordal witness is an induced long cycle") {
  for (const SimpleGraph& g : connected_graphs_up_to(6)) {
    auto cert = is_chordal(g);
    if (!cert.chordal) {
      CHECK(vertex_list_is_induced_cycle(g, cert.induced_cycle));
    }
  }
}

TEST_CASE("maximal cliques") {
  auto path_cliques = maximal_cliques(SimpleGraph::path(3));
  REQUIRE(path_cliques.size() == 2);
  CHECK(path_cliques[0].count() == 2);

  auto diamond_cliques = maximal_cliques(diamond());
  REQUIRE(diamond_cliques.size() == 2);
  CHECK(diamond_cliques[0].count() == 3);
  CHECK(diamond_cliques[1].count() == 3);

  CHECK(maximal_cliques(SimpleGraph::complete(5)).size() == 1);
  CHECK_THROWS_AS(maximal_cliques(SimpleGraph::with_vertex_count(30)),
                  BoundError);

  // every vertex appears in at least one maximal clique, and each clique
  // is in fact maximal
  for (const SimpleGraph& g : connected_graphs_up_to(5)) {
    auto cliques = maximal_cliques(g);
    VertexSet covered;
    for (VertexSet c : cliques) {
      CHECK(g.is_clique(c));
      covered |= c;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (!c.contains(v)) CHECK(!g.is_clique(c.with(v)));
      }
    }
    CHECK(covered == g.vertices());
  }
}

TEST_CASE("separating pairs") {
  SimpleGraph p3 = SimpleGraph::path(3);
  auto cliques = maximal_cliques(p3);
  CHECK(is_separating_pair(p3, cliques[0], cliques[1]));

  auto dc = maximal_cliques(diamond());
  CHECK(is_separating_pair(diamond(), dc[0], dc[1]));

  // two triangles sharing nothing
  SimpleGraph two = SimpleGraph::with_vertex_count(6);
  two.add_edge(0, 1);
  two.add_edge(0, 2);
  two.add_edge(1, 2);
  two.add_edge(3, 4);
  two.add_edge(3, 5);
  two.add_edge(4, 5);
  auto tc = maximal_cliques(two);
  CHECK(!is_separating_pair(two, tc[0], tc[1]));
}

TEST_CASE("reduced clique graph") {
  ReducedCliqueGraph p3 = reduced_clique_graph(SimpleGraph::path(3));
  CHECK(p3.cliques.size() == 2);
  REQUIRE(p3.edge_list().size() == 1);
  CHECK(p3.edge_weights() == std::vector<int>{1});

  ReducedCliqueGraph kd = reduced_clique_graph(diamond());
  REQUIRE(kd.edge_list().size() == 1);
  CHECK(kd.edge_weights() == std::vector<int>{2});

  ReducedCliqueGraph k5 = reduced_clique_graph(SimpleGraph::complete(5));
  CHECK(k5.cliques.size() == 1);
  CHECK(k5.edge_list().empty());

  CHECK_THROWS_AS(reduced_clique_graph(cycle(4)), HypothesisError);

  // intersecting but non-separating pairs keep their flag
  SimpleGraph gem = SimpleGraph::with_vertex_count(5);
  gem.add_edge(0, 1);
  gem.add_edge(1, 2);
  gem.add_edge(2, 3);
  gem.add_edge(0, 4);
  gem.add_edge(1, 4);
  gem.add_edge(2, 4);
  gem.add_edge(3, 4);
  REQUIRE(is_chordal(gem).chordal);
  ReducedCliqueGraph rcg = reduced_clique_graph(gem);
  bool has_non_separating = false;
  for (const auto& pair : rcg.pairs) {
    if (!pair.separating) has_non_separating = true;
  }
  CHECK(has_non_separating);
}

TEST_CASE("weighting validation") {
  auto cliques = maximal_cliques(diamond());
  CHECK_NOTHROW(
      validate_clique_weighting(cliques, clique_cardinality_weighting()));
  CHECK_THROWS_AS(
      validate_clique_weighting(cliques, [](VertexSet) { return 1; }),
      HypothesisError);
  CHECK_THROWS_AS(
      validate_clique_weighting(cliques, [](VertexSet) { return 0; }),
      HypothesisError);
}

TEST_CASE("clique trees") {
  CliqueTreesResult p3 = clique_trees(SimpleGraph::path(3));
  REQUIRE(p3.trees.size() == 1);
  CHECK(p3.trees[0].edges == std::vector<std::pair<int, int>>{{0, 1}});

  CliqueTreesResult k4 = clique_trees(SimpleGraph::complete(4));
  REQUIRE(k4.trees.size() == 1);
  CHECK(k4.trees[0].nodes == 1);
  CHECK(k4.trees[0].edges.empty());

  // three 2-cliques through one center: the reduced clique graph is a
  // triangle of equal weights and every spanning tree is a clique tree
  SimpleGraph star = SimpleGraph::with_vertex_count(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CliqueTreesResult st = clique_trees(star);
  CHECK(st.rcg.edge_list().size() == 3);
  CHECK(st.trees.size() == 3);

  CHECK_THROWS_AS(clique_trees(cycle(5)), HypothesisError);
  SimpleGraph disconnected = SimpleGraph::with_vertex_count(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  CHECK_THROWS_AS(clique_trees(disconnected), HypothesisError);
}

TEST_CASE("clique trees above the enumeration bound fall back to kruskal") {
  SimpleGraph path = SimpleGraph::path(6);  // five maximal cliques
  CliqueTreesResult r =
      clique_trees(path, clique_cardinality_weighting(), 3);
  CHECK(!r.exhaustive);
  REQUIRE(r.trees.size() == 1);
  CHECK(r.trees[0].edges.size() == 4);
}

TEST_CASE("graph tree width uses the bag-size convention") {
  CHECK(graph_tree_width(SimpleGraph::complete(4)) == 4);
  CHECK(graph_tree_width(SimpleGraph::path(5)) == 2);
  CHECK(graph_tree_width(diamond()) == 3);
  CHECK_THROWS_AS(graph_tree_width(cycle(4)), HypothesisError);
}

TEST_CASE("spanning tree enumeration") {
  // triangle: three spanning trees
  std::vector<std::pair<int, int>> host = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(enumerate_spanning_trees(3, host).size() == 3);
  // K4 has 16 labeled spanning trees
  std::vector<std::pair<int, int>> k4_host = {{0, 1}, {0, 2}, {0, 3},
                                              {1, 2}, {1, 3}, {2, 3}};
  CHECK(enumerate_spanning_trees(4, k4_host).size() == 16);
  // disconnected host: none
  CHECK(enumerate_spanning_trees(3, {{0, 1}}).empty());
  // max-weight tie-break is deterministic
  std::vector<int> weights = {1, 1, 1};
  CHECK(max_weight_spanning_tree(3, host, weights) == 0b011);
}

TEST_CASE("labeled tree enumeration counts") {
  CHECK(all_labeled_trees(1).size() == 1);
  CHECK(all_labeled_trees(2).size() == 1);
  CHECK(all_labeled_trees(3).size() == 3);
  CHECK(all_labeled_trees(4).size() == 16);
  std::vector<Tree> five = all_labeled_trees(5);
  CHECK(five.size() == 125);
  std::set<Tree> unique(five.begin(), five.end());
  CHECK(unique.size() == 125);
}
