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

#include "rotunda/classification.hpp"

#include <set>

#include "doctest.h"
#include "rotunda/catalog.hpp"
#include "rotunda/correspondence.hpp"
#include "rotunda/modularity.hpp"
#include "rotunda/roundness.hpp"

using namespace rotunda;

namespace {

ElementSet by_labels(const Matroid& m, std::initializer_list<const char*> ls) {
  ElementSet out;
  for (const char* l : ls) out = out.with(m.element_by_label(l));
  return out;
}

}  // namespace

TEST_CASE("supersolvability of the fixtures") {
  CHECK(!is_supersolvable(u36()));
  CHECK(is_supersolvable(fano()));
  CHECK(is_supersolvable(pabx()));
  CHECK(!is_supersolvable(dual_k33()));
  CHECK(!is_supersolvable(w4()));
  CHECK(is_supersolvable(Matroid::uniform(0, 2)));
  CHECK(is_supersolvable(Matroid::uniform(0, 0)));
}

TEST_CASE("the modular chain certificate is valid") {
  for (const Matroid& m :
       {fano(), pabx(), graphic_matroid(SimpleGraph::complete(4))}) {
    auto chain = supersolvable_chain(m);
    REQUIRE(chain.has_value());
    REQUIRE(static_cast<int>(chain->flats.size()) == m.rank() + 1);
    for (int i = 0; i <= m.rank(); ++i) {
      const Flat& f = chain->flats[i];
      CHECK(f.rank == i);
      CHECK(m.is_flat(f.elements));
      CHECK(is_modular_flat(m, f.elements));
      if (i > 0) {
        CHECK(chain->flats[i - 1].elements.proper_subset_of(f.elements));
      }
    }
  }
}

TEST_CASE("saturation") {
  CHECK(is_saturated(u36()).first);
  CHECK(is_saturated(fano()).first);
  CHECK(is_saturated(dual_k33()).first);
  CHECK(!is_saturated(w4()).first);

  auto [sat, witness] = is_saturated(pabx());
  CHECK(!sat);
  REQUIRE(witness.has_value());
  // the first round non-modular flat in canonical order
  CHECK(witness->elements == by_labels(pabx(), {"a", "d", "x"}));
  CHECK(is_round(pabx(), witness->elements));
  CHECK(!is_modular_flat(pabx(), witness->elements));

  // cycle matroids are always saturated
  for (int n = 2; n <= 5; ++n) {
    CHECK(is_saturated(graphic_matroid(SimpleGraph::complete(n))).first);
    CHECK(is_saturated(graphic_matroid(SimpleGraph::path(n))).first);
  }
}

TEST_CASE("chords") {
  Matroid u = u36();
  CHECK(chords(u, u.circuits().front()).empty());
  CHECK_THROWS_AS(chords(u, by_labels(u, {"a", "b"})), InputError);

  // K4's three 4-cycles each have both diagonals as chords
  Matroid k4 = graphic_matroid(SimpleGraph::complete(4));
  for (ElementSet c : k4.circuits()) {
    if (c.count() != 4) continue;
    auto witnesses = chords(k4, c);
    std::set<int> chord_elements;
    for (const Chord& ch : witnesses) {
      CHECK(!c.contains(ch.chord));
      CHECK((ch.part_a | ch.part_b) == c);
      CHECK((ch.part_a & ch.part_b).is_empty());
      CHECK(k4.is_circuit(ch.part_a.with(ch.chord)));
      CHECK(k4.is_circuit(ch.part_b.with(ch.chord)));
      chord_elements.insert(ch.chord);
    }
    CHECK(chord_elements.size() == 2);
  }

  // the whirl: the three 4-circuits inherited from K4 have chords, the
  // three rim-relaxation circuits do not
  Matroid w = w4();
  CHECK(chords(w, by_labels(w, {"a", "b", "e", "f"})).size() > 0);
  CHECK(chords(w, by_labels(w, {"a", "d", "e", "f"})).empty());
  CHECK(chords(w, by_labels(w, {"b", "d", "e", "f"})).empty());
  CHECK(chords(w, by_labels(w, {"c", "d", "e", "f"})).empty());
}

TEST_CASE("c-chordality") {
  auto [u_ok, u_witness] = is_c_chordal(u36());
  CHECK(!u_ok);
  REQUIRE(u_witness.has_value());
  CHECK(u_witness->count() == 4);

  CHECK(is_c_chordal(dual_k33()).first);
  CHECK(is_c_chordal(pabx()).first);
  CHECK(is_c_chordal(fano()).first);

  // the whirl's rim-relaxation circuits are chordless
  auto [w_ok, w_witness] = is_c_chordal(w4());
  CHECK(!w_ok);
  REQUIRE(w_witness.has_value());
  CHECK(chords(w4(), *w_witness).empty());
}

TEST_CASE("strong chord witnesses") {
  Matroid f7 = fano();
  for (ElementSet c : f7.circuits()) {
    if (c.count() < 4) continue;
    auto witness = strong_chord_witness(f7, c);
    REQUIRE(witness.has_value());
    ElementSet pair{witness->x, witness->y};
    CHECK(pair.subset_of(c));
    CHECK(!c.contains(witness->z));
    CHECK(f7.is_circuit(pair.with(witness->z)));
    CHECK(f7.is_circuit((c - pair).with(witness->z)));
  }

  CHECK(!strong_chord_witness(u36(), u36().circuits().front()).has_value());

  // K4's 4-cycles: two adjacent cycle edges and their closing diagonal
  Matroid k4 = graphic_matroid(SimpleGraph::complete(4));
  for (ElementSet c : k4.circuits()) {
    if (c.count() == 4) CHECK(strong_chord_witness(k4, c).has_value());
  }
}

TEST_CASE("classify bundles the three predicates") {
  ChordalityProfile u = classify(u36());
  CHECK(!u.supersolvable);
  CHECK(u.saturated);
  CHECK(!u.c_chordal);
  CHECK(!u.chain.has_value());
  CHECK(u.chordless_circuit.has_value());

  ChordalityProfile f = classify(fano());
  CHECK(f.supersolvable);
  CHECK(f.saturated);
  CHECK(f.c_chordal);
  CHECK(f.chain.has_value());

  ChordalityProfile k = classify(dual_k33());
  CHECK(!k.supersolvable);
  CHECK(k.saturated);
  CHECK(k.c_chordal);

  ChordalityProfile p = classify(pabx());
  CHECK(p.supersolvable);
  CHECK(!p.saturated);
  CHECK(p.c_chordal);
  CHECK(p.round_non_modular.has_value());

  // the whirl: the computed truth; its rim-relaxation 4-circuits are
  // chordless, so all three predicates are false
  ChordalityProfile w = classify(w4());
  CHECK(!w.supersolvable);
  CHECK(!w.saturated);
  CHECK(!w.c_chordal);
}

TEST_CASE("supersolvable restrictions along the chain") {
  Matroid p = pabx();
  auto chain = supersolvable_chain(p);
  REQUIRE(chain.has_value());
  for (const Flat& f : chain->flats) {
    CHECK(is_supersolvable(p.restrict(f.elements)));
  }
}
