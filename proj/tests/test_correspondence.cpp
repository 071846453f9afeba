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

#include "rotunda/correspondence.hpp"

#include "doctest.h"
#include "rotunda/catalog.hpp"
#include "rotunda/classification.hpp"
#include "rotunda/roundness.hpp"

using namespace rotunda;

namespace {

SimpleGraph diamond() {
  SimpleGraph g = SimpleGraph::with_vertex_count(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.set_name("diamond");
  return g;
}

}  // namespace

TEST_CASE("graphic matroid construction") {
  Matroid triangle = graphic_matroid(SimpleGraph::complete(3));
  CHECK(triangle.rank() == 2);
  CHECK(triangle.size() == 3);
  CHECK(triangle.circuits().size() == 1);

  Matroid path = graphic_matroid(SimpleGraph::path(3));
  CHECK(path.rank() == 2);
  CHECK(path.connected_components().size() == 2);

  Matroid k4 = graphic_matroid(SimpleGraph::complete(4));
  CHECK(k4.rank() == 3);
  CHECK(k4.size() == 6);
}

TEST_CASE("two_connectivize on a path") {
  SimpleGraph p3 = SimpleGraph::path(3);
  SimpleGraph g2 = two_connectivize(p3);
  // v1 is the unique cut-vertex; its clone joins v0, v1, v2: the result
  // is K4 minus the v0-v2 edge
  CHECK(g2.vertex_count() == 4);
  CHECK(g2.edge_count() == 5);
  CHECK(g2.is_two_connected());
  CHECK(is_chordal(g2).chordal);
  int clone = g2.vertex_by_label("v1'");
  REQUIRE(clone >= 0);
  CHECK(g2.adjacent(clone, 0));
  CHECK(g2.adjacent(clone, 1));
  CHECK(g2.adjacent(clone, 2));
  CHECK(!g2.adjacent(0, 2));
}

TEST_CASE("two_connectivize fixes a star") {
  SimpleGraph star = SimpleGraph::with_vertex_count(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  SimpleGraph g2 = two_connectivize(star);
  CHECK(g2.vertex_count() == 5);
  int clone = g2.vertex_by_label("v0'");
  REQUIRE(clone >= 0);
  for (int v = 0; v < 4; ++v) CHECK(g2.adjacent(clone, v));
  CHECK(g2.is_two_connected());
}

TEST_CASE("two_connectivize leaves 2-connected graphs alone") {
  SimpleGraph d = diamond();
  SimpleGraph g2 = two_connectivize(d);
  CHECK(g2.vertex_count() == d.vertex_count());
  CHECK(g2.edge_count() == d.edge_count());
}

TEST_CASE("adjacent cut-vertices get adjacent clones") {
  SimpleGraph p4 = SimpleGraph::path(4);
  SimpleGraph g2 = two_connectivize(p4);
  int c1 = g2.vertex_by_label("v1'");
  int c2 = g2.vertex_by_label("v2'");
  REQUIRE(c1 >= 0);
  REQUIRE(c2 >= 0);
  CHECK(g2.adjacent(c1, c2));
  // the clique correspondence needs exactly three maximal cliques here
  CHECK(maximal_cliques(g2).size() == 3);
  ReducedCliqueGraph before = reduced_clique_graph(p4);
  ReducedCliqueGraph after = reduced_clique_graph(g2);
  CHECK(graph_isomorphism(static_cast<int>(before.cliques.size()),
                          before.edge_list(),
                          static_cast<int>(after.cliques.size()),
                          after.edge_list())
            .has_value());
}

TEST_CASE("reduced clique graph equals rotunda graph when 2-connected") {
  CHECK(check_rcg_equals_rotunda_graph(diamond()).equal);
  CHECK(check_rcg_equals_rotunda_graph(SimpleGraph::complete(4)).equal);
  CHECK_THROWS_AS(check_rcg_equals_rotunda_graph(SimpleGraph::path(3)),
                  HypothesisError);
}

TEST_CASE("compliant graph base case") {
  // two parallel elements, rank 1: the companion graph is K4
  Matroid m = Matroid::uniform(1, 2);
  auto [g, theta] = compliant_graph(m);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  ComplianceReport report = check_compliance(m, g, theta);
  CHECK(report.compliant());
}

TEST_CASE("compliant graph for the diamond cycle matroid") {
  Matroid m = graphic_matroid(diamond());
  auto [g, theta] = compliant_graph(m);
  CHECK(g.vertex_count() == 10);  // two vertices per element
  CHECK(g.is_two_connected());
  CHECK(is_chordal(g).chordal);
  ComplianceReport report = check_compliance(m, g, theta);
  CHECK(report.compliant());
  // rotunda map onto exactly two maximal cliques
  CHECK(maximal_cliques(g).size() == 2);
}

TEST_CASE("compliant graph for a single-rotunda matroid") {
  Matroid m = graphic_matroid(SimpleGraph::complete(4));
  auto [g, theta] = compliant_graph(m);
  ComplianceReport report = check_compliance(m, g, theta);
  CHECK(report.compliant());
  CHECK(maximal_cliques(g).size() == 1);
}

TEST_CASE("compliance catches a broken theta") {
  Matroid m = Matroid::uniform(1, 2);
  auto [g, theta] = compliant_graph(m);
  // map both elements onto overlapping pairs: condition (ii) fails
  ComplianceMap broken = theta;
  broken.theta[1] = broken.theta[0];
  ComplianceReport report = check_compliance(m, g, broken);
  CHECK(!report.compliant());
  CHECK(!report.vertices_covered_once);
}

TEST_CASE("compliant graph requires the hypotheses") {
  CHECK_THROWS_AS(compliant_graph(u36()), HypothesisError);
  CHECK_THROWS_AS(compliant_graph(pabx()), HypothesisError);
  Matroid path = Matroid::graphic(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(compliant_graph(path), HypothesisError);
}

TEST_CASE("graph isomorphism checker") {
  SimpleGraph a = SimpleGraph::path(4);
  // relabeled path
  SimpleGraph b = SimpleGraph::with_vertex_count(4);
  b.add_edge(2, 0);
  b.add_edge(0, 3);
  b.add_edge(3, 1);
  auto iso = graph_isomorphism(4, a.edges(), 4, b.edges());
  REQUIRE(iso.has_value());
  // the mapping preserves adjacency
  for (auto [u, v] : a.edges()) CHECK(b.adjacent((*iso)[u], (*iso)[v]));

  CHECK(!graph_isomorphism(4, a.edges(), 4,
                           SimpleGraph::complete(4).edges())
             .has_value());
  // same degree sequence, different graphs: C6 vs two triangles
  std::vector<std::pair<int, int>> c6 = {{0, 1}, {1, 2}, {2, 3},
                                         {3, 4}, {4, 5}, {0, 5}};
  std::vector<std::pair<int, int>> kk = {{0, 1}, {1, 2}, {0, 2},
                                         {3, 4}, {4, 5}, {3, 5}};
  CHECK(!graph_isomorphism(6, c6, 6, kk).has_value());
}

TEST_CASE("round trips") {
  // graph -> matroid: the reduced clique graph of a path with two edges is
  // a single edge; the matroid route reproduces it
  CHECK(roundtrip_from_chordal_graph(SimpleGraph::path(3)).isomorphic);
  CHECK(roundtrip_from_chordal_graph(diamond()).isomorphic);
  CHECK(roundtrip_from_chordal_graph(SimpleGraph::complete(4)).isomorphic);

  // disconnected chordal graph: direct sums and disjoint unions line up
  SimpleGraph two_parts = SimpleGraph::with_vertex_count(5);
  two_parts.add_edge(0, 1);
  two_parts.add_edge(1, 2);
  two_parts.add_edge(3, 4);
  CHECK(roundtrip_from_chordal_graph(two_parts).isomorphic);

  // matroid -> graph
  CHECK(roundtrip_from_matroid(fano()).isomorphic);
  CHECK(roundtrip_from_matroid(graphic_matroid(diamond())).isomorphic);

  Matroid m = matroid_with_rotunda_graph_of(SimpleGraph::path(3));
  CHECK(is_supersolvable(m));
  CHECK(is_saturated(m).first);
}
