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

#include "rotunda/matroid.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "rotunda/catalog.hpp"
#include "rotunda/correspondence.hpp"

using namespace rotunda;

namespace {

ElementSet by_labels(const Matroid& m, std::initializer_list<const char*> ls) {
  ElementSet out;
  for (const char* l : ls) {
    int e = m.element_by_label(l);
    REQUIRE(e >= 0);
    out = out.with(e);
  }
  return out;
}

Matroid path_two_edges() {
  return Matroid::graphic(3, {{0, 1}, {1, 2}});
}

Matroid k4_matroid() { return graphic_matroid(SimpleGraph::complete(4)); }

}  // namespace

TEST_CASE("rank oracle matches the fixture geometry") {
  Matroid u = u36();
  CHECK(u.rank(ElementSet::empty()) == 0);
  CHECK(u.rank(by_labels(u, {"a", "b", "c", "d"})) == 3);
  CHECK(u.rank() == 3);

  Matroid p = pabx();
  CHECK(p.rank(by_labels(p, {"p", "a", "b", "c"})) == 2);
  CHECK(p.rank(by_labels(p, {"p", "d", "e", "f"})) == 2);
  CHECK(p.rank(by_labels(p, {"a", "d", "x"})) == 2);
  CHECK(p.rank() == 3);

  Matroid k4 = k4_matroid();
  CHECK(k4.rank(k4.elements()) == 3);
  CHECK(k4.size() == 6);
}

TEST_CASE("closure") {
  Matroid u = u36();
  CHECK(u.closure(u.elements()) == u.elements());
  CHECK(u.closure(by_labels(u, {"a", "b"})) == by_labels(u, {"a", "b"}));

  Matroid p = pabx();
  CHECK(p.closure(by_labels(p, {"a", "d"})) == by_labels(p, {"a", "d", "x"}));
  CHECK(p.closure(p.elements()) == p.elements());
}

TEST_CASE("circuit enumeration") {
  // every 4-subset of the six elements: C(6,4) = 15 circuits
  Matroid u = u36();
  const auto& circuits = u.circuits();
  CHECK(circuits.size() == 15);
  for (ElementSet c : circuits) CHECK(c.count() == 4);
  CHECK(std::is_sorted(circuits.begin(), circuits.end()));

  // whirl circuits, frozen from the independent line-based oracle:
  // the three triangles plus the six triangle-free 4-subsets
  Matroid w = w4();
  std::set<ElementSet> expect;
  for (auto labels : std::vector<std::vector<const char*>>{
           {"a", "b", "d"},
           {"b", "c", "e"},
           {"a", "c", "f"},
           {"a", "b", "e", "f"},
           {"a", "c", "d", "e"},
           {"a", "d", "e", "f"},
           {"b", "c", "d", "f"},
           {"b", "d", "e", "f"},
           {"c", "d", "e", "f"}}) {
    ElementSet s;
    for (const char* l : labels) s = s.with(w.element_by_label(l));
    expect.insert(s);
  }
  std::set<ElementSet> got(w.circuits().begin(), w.circuits().end());
  CHECK(got == expect);

  CHECK(path_two_edges().circuits().empty());
}

TEST_CASE("flat enumeration") {
  Matroid u = u36();
  CHECK(flats(u, 2).size() == 15);
  for (const Flat& f : flats(u, 2)) CHECK(f.elements.count() == 2);
  CHECK(flats(u, 0).size() == 1);
  CHECK(flats(u, 0)[0].elements.is_empty());

  // rank-2 flats of the pabx geometry, derived straight from its lines:
  // the five listed lines plus every pair lying on none of them
  Matroid p = pabx();
  std::vector<ElementSet> lines = {
      by_labels(p, {"p", "a", "b", "c"}), by_labels(p, {"p", "d", "e", "f"}),
      by_labels(p, {"a", "d", "x"}), by_labels(p, {"b", "e", "x"}),
      by_labels(p, {"c", "f", "x"})};
  std::set<ElementSet> expect(lines.begin(), lines.end());
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      ElementSet pair{a, b};
      bool on_line = false;
      for (ElementSet line : lines) {
        if (pair.subset_of(line)) on_line = true;
      }
      if (!on_line) expect.insert(pair);
    }
  }
  std::set<ElementSet> got;
  for (const Flat& f : flats(p, 2)) got.insert(f.elements);
  CHECK(got == expect);
}

TEST_CASE("cocircuits are hyperplane complements") {
  Matroid u = u36();
  std::vector<ElementSet> cocircuits = u.cocircuits();
  CHECK(cocircuits.size() == 15);
  for (ElementSet c : cocircuits) CHECK(c.count() == 4);

  // K4: a vertex star per vertex plus the three 2+2 bipartition cuts
  Matroid k4 = k4_matroid();
  CHECK(k4.cocircuits().size() == 7);
  std::multiset<int> sizes;
  for (ElementSet c : k4.cocircuits()) sizes.insert(c.count());
  CHECK(sizes == std::multiset<int>{3, 3, 3, 3, 4, 4, 4});

  Matroid rank1 = Matroid::uniform(1, 3);
  auto coc = rank1.cocircuits();
  REQUIRE(coc.size() == 1);
  CHECK(coc[0] == rank1.elements());
}

TEST_CASE("connected components") {
  auto components = path_two_edges().connected_components();
  REQUIRE(components.size() == 2);
  CHECK(components[0].count() == 1);
  CHECK(components[1].count() == 1);

  CHECK(u36().connected_components().size() == 1);
  CHECK(u36().is_connected());

  Matroid sum =
      Matroid::direct_sum({Matroid::uniform(1, 1), Matroid::uniform(2, 3)});
  auto classes = sum.connected_components();
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == ElementSet{0});
  CHECK(classes[1] == ElementSet{1, 2, 3});

  // loops are singletons
  Matroid loop_sum =
      Matroid::direct_sum({Matroid::uniform(0, 1), Matroid::uniform(2, 3)});
  CHECK(loop_sum.connected_components().size() == 2);
  CHECK(loop_sum.loops() == ElementSet{0});
}

TEST_CASE("representations agree where they overlap") {
  // U(2,3) as uniform, graphic (triangle), linear, circuits and bases
  Matroid uniform = Matroid::uniform(2, 3);
  Matroid triangle = Matroid::graphic(3, {{0, 1}, {0, 2}, {1, 2}});
  Matroid linear = Matroid::linear(3, {{1, 0, 1}, {0, 1, 1}});
  Matroid circuits = Matroid::from_circuits(3, {ElementSet{0, 1, 2}});
  Matroid bases = Matroid::from_bases(
      3, {ElementSet{0, 1}, ElementSet{0, 2}, ElementSet{1, 2}});
  for_each_subset(ElementSet::full(3), [&](ElementSet x) {
    int expect = uniform.rank(x);
    CHECK(triangle.rank(x) == expect);
    CHECK(linear.rank(x) == expect);
    CHECK(circuits.rank(x) == expect);
    CHECK(bases.rank(x) == expect);
  });
}

TEST_CASE("direct sum rank additivity") {
  Matroid a = Matroid::uniform(2, 4);
  Matroid b = k4_matroid();
  Matroid sum = Matroid::direct_sum({a, b});
  REQUIRE(sum.size() == 10);
  for_each_subset(sum.elements(), [&](ElementSet x) {
    ElementSet xa(x.bits() & 0xF);
    ElementSet xb(x.bits() >> 4);
    CHECK(sum.rank(x) == a.rank(xa) + b.rank(xb));
  });
}

TEST_CASE("restriction shares the parent rank oracle") {
  Matroid p = pabx();
  ElementSet line = by_labels(p, {"p", "a", "b", "c"});
  Matroid view = p.restrict(line);
  CHECK(view.rank() == 2);
  CHECK(view.size() == 4);
  CHECK(view.is_view());
  for_each_subset(line, [&](ElementSet x) { CHECK(view.rank(x) == p.rank(x)); });
  // flats of the view are intersections of parent flats
  for (const Flat& f : view.flats()) {
    CHECK(f.elements.subset_of(line));
    CHECK(view.closure(f.elements) == f.elements);
  }
  CHECK_THROWS_AS(p.restrict(ElementSet::full(9)), InputError);
}

TEST_CASE("construction validates the axioms") {
  // a circuit containing another
  CHECK_THROWS_AS(
      Matroid::from_circuits(3, {ElementSet{0, 1}, ElementSet{0, 1, 2}}),
      InputError);
  // elimination failure: parallelism must be transitive
  CHECK_THROWS_AS(
      Matroid::from_circuits(3, {ElementSet{0, 1}, ElementSet{1, 2}}),
      InputError);
  CHECK_NOTHROW(Matroid::from_circuits(
      3, {ElementSet{0, 1}, ElementSet{1, 2}, ElementSet{0, 2}}));
  // the empty set is never a circuit
  CHECK_THROWS_AS(Matroid::from_circuits(2, {ElementSet{}}), InputError);

  // bases: equicardinality and exchange
  CHECK_THROWS_AS(
      Matroid::from_bases(3, {ElementSet{0}, ElementSet{1, 2}}), InputError);
  CHECK_THROWS_AS(
      Matroid::from_bases(4, {ElementSet{0, 1}, ElementSet{2, 3}}),
      InputError);
  CHECK_NOTHROW(Matroid::from_bases(
      4, {ElementSet{0, 1}, ElementSet{0, 2}, ElementSet{0, 3},
          ElementSet{1, 2}, ElementSet{1, 3}, ElementSet{2, 3}}));

  CHECK_THROWS_AS(Matroid::uniform(4, 3), InputError);
  CHECK_THROWS_AS(Matroid::linear(4, {{1, 0}}), InputError);
  CHECK_THROWS_AS(Matroid::graphic(2, {{0, 5}}), InputError);
  CHECK_THROWS_AS(
      Matroid::uniform(2, 3, {"a", "a", "b"}), InputError);
}

TEST_CASE("enumeration bound is enforced") {
  Matroid big = Matroid::uniform(3, 20);
  CHECK(big.rank(ElementSet::full(20)) == 3);  // rank itself has no bound
  CHECK_THROWS_AS(big.flats(), BoundError);
  CHECK_THROWS_AS(big.circuits(), BoundError);
}

TEST_CASE("graphic matroids accept multigraphs") {
  // two parallel edges and a self-loop
  Matroid m = Matroid::graphic(2, {{0, 1}, {0, 1}, {1, 1}});
  CHECK(m.rank() == 1);
  CHECK(m.loops() == ElementSet{2});
  CHECK(m.circuits().size() == 2);  // the loop and the parallel pair
}

TEST_CASE("catalog provides the named fixtures") {
  auto entries = catalog(4);
  bool has_k4 = false;
  for (const CatalogEntry& e : entries) {
    if (e.name == "M(K4)") {
      has_k4 = true;
      CHECK(e.matroid.size() == 6);
      CHECK(e.matroid.rank() == 3);
    }
  }
  CHECK(has_k4);

  CHECK(fano().size() == 7);
  CHECK(fano().rank() == 3);
  CHECK(pabx().size() == 8);
  CHECK(pabx().rank() == 3);
  CHECK(dual_k33().size() == 9);
  CHECK(dual_k33().rank() == 4);
  // bonds of K_{3,3}: 6 vertex stars, 9 four-edge cuts, 9 five-edge cuts
  CHECK(dual_k33().circuits().size() == 24);
}

TEST_CASE("memoisation is transparent") {
  Matroid u = u36();
  ElementSet x = by_labels(u, {"a", "c", "e"});
  int first = u.rank(x);
  auto flats_once = u.flats();
  CHECK(u.rank(x) == first);
  CHECK(u.flats() == flats_once);
}
