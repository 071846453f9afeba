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

#include <algorithm>
#include <unordered_map>

#include "rotunda/modularity.hpp"
#include "rotunda/roundness.hpp"

namespace rotunda {

namespace {

using ChainMemo =
    std::unordered_map<std::uint64_t, std::optional<std::vector<ElementSet>>>;

// Explores every modular hyperplane of the restriction: a hyperplane whose
// restriction is not supersolvable does not refute supersolvability.
std::optional<std::vector<ElementSet>> chain_search(const Matroid& root,
                                                    ElementSet domain,
                                                    ChainMemo& memo) {
  auto it = memo.find(domain.bits());
  if (it != memo.end()) return it->second;

  Matroid view = root.restrict(domain);
  std::optional<std::vector<ElementSet>> result;
  if (view.rank() == 0) {
    result = std::vector<ElementSet>{domain};
  } else {
    for (const Flat& h : modular_hyperplanes(view)) {
      auto sub = chain_search(root, h.elements, memo);
      if (sub) {
        sub->push_back(domain);
        result = std::move(sub);
        break;
      }
    }
  }
  memo[domain.bits()] = result;
  return result;
}

}  // namespace

std::optional<ModularChain> supersolvable_chain(const Matroid& m) {
  ChainMemo memo;
  auto sets = chain_search(m, m.elements(), memo);
  if (!sets) return std::nullopt;
  ModularChain chain;
  for (ElementSet f : *sets) chain.flats.push_back({f, m.rank(f)});
  return chain;
}

bool is_supersolvable(const Matroid& m) {
  return supersolvable_chain(m).has_value();
}

std::pair<bool, std::optional<Flat>> is_saturated(const Matroid& m) {
  for (const Flat& f : round_flats(m)) {
    if (!is_modular_flat(m, f.elements)) return {false, f};
  }
  return {true, std::nullopt};
}

std::vector<Chord> chords(const Matroid& m, ElementSet circuit) {
  if (!m.is_circuit(circuit)) {
    throw InputError("chords: " + m.label_set(circuit) + " is not a circuit");
  }
  std::vector<Chord> out;
  int anchor = circuit.lowest();
  for (int z : m.elements() - circuit) {
    // canonical split: part A carries the smallest circuit element
    for_each_subset(circuit.without(anchor), [&](ElementSet rest) {
      ElementSet a = rest.with(anchor);
      ElementSet b = circuit - a;
      if (b.is_empty()) return;
      if (m.is_circuit(a.with(z)) && m.is_circuit(b.with(z))) {
        out.push_back({circuit, z, a, b});
      }
    });
  }
  return out;
}

std::pair<bool, std::optional<ElementSet>> is_c_chordal(const Matroid& m) {
  for (ElementSet c : m.circuits()) {
    if (c.count() < 4) continue;
    if (chords(m, c).empty()) return {false, c};
  }
  return {true, std::nullopt};
}

std::optional<StrongChordWitness> strong_chord_witness(const Matroid& m,
                                                       ElementSet circuit) {
  if (!m.is_circuit(circuit)) {
    throw InputError("strong_chord_witness: not a circuit");
  }
  for (int x : circuit) {
    for (int y : circuit) {
      if (y <= x) continue;
      ElementSet rest = circuit.without(x).without(y);
      for (int z : m.elements() - circuit) {
        if (m.is_circuit(ElementSet{x, y}.with(z)) &&
            m.is_circuit(rest.with(z))) {
          return StrongChordWitness{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

ChordalityProfile classify(const Matroid& m) {
  ChordalityProfile profile;
  profile.chain = supersolvable_chain(m);
  profile.supersolvable = profile.chain.has_value();
  auto [saturated, witness] = is_saturated(m);
  profile.saturated = saturated;
  profile.round_non_modular = witness;
  auto [chordal, chordless] = is_c_chordal(m);
  profile.c_chordal = chordal;
  profile.chordless_circuit = chordless;
  return profile;
}

}  // namespace rotunda
