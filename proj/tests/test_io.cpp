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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rotunda/catalog.hpp"
#include "rotunda/dot_export.hpp"
#include "rotunda/json_io.hpp"
#include "rotunda/roundness.hpp"
#include "rotunda/treewidth.hpp"

using namespace rotunda;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(ROTUNDA_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool same_matroid(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) return false;
  for (int e = 0; e < a.ground_size(); ++e) {
    if (a.label(e) != b.label(e)) return false;
  }
  bool equal = true;
  for_each_subset(a.elements(), [&](ElementSet x) {
    if (a.rank(x) != b.rank(x)) equal = false;
  });
  return equal;
}

}  // namespace

TEST_CASE("input kind detection") {
  CHECK(detect_input_kind(read_fixture("u36.json")) == InputKind::Matroid);
  CHECK(detect_input_kind(read_fixture("diamond.json")) == InputKind::Graph);
  CHECK_THROWS_AS(detect_input_kind("{\"x\": 1}"), InputError);
  CHECK_THROWS_AS(detect_input_kind("not json at all"), InputError);
}

TEST_CASE("matroid files parse into the expected fixtures") {
  Matroid u = matroid_from_json(read_fixture("u36.json"));
  CHECK(u.name() == "U(3,6)");
  CHECK(same_matroid(u, u36()));

  Matroid p = matroid_from_json(read_fixture("pabx.json"));
  CHECK(same_matroid(p, pabx()));
}

TEST_CASE("each representation round-trips through json") {
  std::vector<Matroid> cases = {
      u36(),
      fano(),
      pabx(),
      Matroid::graphic(3, {{0, 1}, {0, 1}, {1, 2}}),
      Matroid::from_bases(3, {ElementSet{0, 1}, ElementSet{0, 2},
                              ElementSet{1, 2}}),
      Matroid::direct_sum({Matroid::uniform(1, 2), u36()}),
  };
  for (const Matroid& m : cases) {
    Matroid back = matroid_from_json(matroid_to_json(m));
    CHECK(back.rep_kind() == m.rep_kind());
    CHECK(same_matroid(m, back));
    // serialisation is stable
    CHECK(matroid_to_json(back) == matroid_to_json(m));
  }
}

TEST_CASE("graph files") {
  SimpleGraph g = graph_from_json(read_fixture("diamond.json"));
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(g.name() == "diamond");
  SimpleGraph back = graph_from_json(graph_to_json(g));
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
  CHECK(graph_to_json(back) == graph_to_json(g));
}

TEST_CASE("parse errors carry diagnostics") {
  CHECK_THROWS_WITH_AS(matroid_from_json("{"),
                       doctest::Contains("parse error"), InputError);
  CHECK_THROWS_WITH_AS(matroid_from_json("{\"type\": \"nonsense\"}"),
                       doctest::Contains("unknown matroid type"),
                       InputError);
  CHECK_THROWS_WITH_AS(matroid_from_json("{\"type\": \"uniform\"}"),
                       doctest::Contains("rank"), InputError);
  CHECK_THROWS_AS(
      graph_from_json("{\"vertices\": [\"a\"], \"edges\": [[\"a\"]]}"),
      InputError);
  // unknown label with a pinned element list
  CHECK_THROWS_AS(matroid_from_json(
                      R"({"type":"circuits","elements":["a","b"],
                          "circuits":[["a","z"]]})"),
                  InputError);
}

TEST_CASE("rotunda graph json schema") {
  SimpleGraph diamond = graph_from_json(read_fixture("diamond.json"));
  Matroid m = graphic_matroid(diamond);
  RotundaGraph rg = rotunda_graph(m);
  std::string text = rotunda_graph_to_json(m, rg);
  CHECK(text.find("\"nodes\"") != std::string::npos);
  CHECK(text.find("\"cover\"") != std::string::npos);
  CHECK(text.find("\"weight\": 1") != std::string::npos);
}

TEST_CASE("width report json") {
  Matroid m = u36();
  TreeDecomposition td{Tree::single_node(), {m.elements()}};
  WidthReport report = width(m, td);
  std::string text = width_report_to_json(m, td, report);
  CHECK(text.find("\"width\": 3") != std::string::npos);
  CHECK(text.find("\"bags\"") != std::string::npos);
}

TEST_CASE("dot exports are deterministic and well-formed") {
  SimpleGraph diamond = graph_from_json(read_fixture("diamond.json"));
  Matroid m = graphic_matroid(diamond);
  RotundaGraph rg = rotunda_graph(m);
  std::string dot = dot_rotunda_graph(m, rg);
  CHECK(dot == dot_rotunda_graph(m, rg));
  CHECK(dot.find("R0 [") != std::string::npos);
  CHECK(dot.find("R1 [") != std::string::npos);
  CHECK(dot.find("R0 -- R1") != std::string::npos);
  CHECK(dot.find("σ=1") != std::string::npos);

  ReducedCliqueGraph rcg = reduced_clique_graph(diamond);
  std::string cg = dot_clique_graph(diamond, rcg, true);
  CHECK(cg.find("C0 -- C1") != std::string::npos);
  CHECK(cg.find("σ=2") != std::string::npos);
}
