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

#ifndef ROTUNDA_CLASSIFICATION_HPP
#define ROTUNDA_CLASSIFICATION_HPP

#include <optional>
#include <vector>

#include "rotunda/matroid.hpp"

namespace rotunda {

/// A full chain of modular flats F_0 ⊆ F_1 ⊆ ... ⊆ F_r with r(F_i) = i;
/// the certificate of supersolvability.
struct ModularChain {
  std::vector<Flat> flats;
};

/// A chord z of a circuit C: an outside element splitting C into parts A, B
/// with A ∪ {z} and B ∪ {z} both circuits. Part A carries the smallest
/// element of C, so each unordered split appears once.
struct Chord {
  ElementSet circuit;
  int chord = 0;
  ElementSet part_a;
  ElementSet part_b;
};

struct StrongChordWitness {
  int x = 0;
  int y = 0;
  int z = 0;
};

struct ChordalityProfile {
  bool supersolvable = false;
  std::optional<ModularChain> chain;
  bool saturated = false;
  std::optional<Flat> round_non_modular;
  bool c_chordal = false;
  std::optional<ElementSet> chordless_circuit;
};

/// Recursive search over modular hyperplanes with memoisation on the
/// restricted domain; all modular hyperplanes are explored, since a failed
/// branch does not refute supersolvability.
std::optional<ModularChain> supersolvable_chain(const Matroid& m);
bool is_supersolvable(const Matroid& m);

/// Every round flat modular? Returns a round non-modular witness otherwise.
std::pair<bool, std::optional<Flat>> is_saturated(const Matroid& m);

/// All chord witnesses of a circuit. Throws InputError when C is not a
/// circuit.
std::vector<Chord> chords(const Matroid& m, ElementSet circuit);

/// Every circuit of size >= 4 has a chord? Returns a chordless circuit
/// otherwise.
std::pair<bool, std::optional<ElementSet>> is_c_chordal(const Matroid& m);

/// Distinct x,y in C and z outside C with {x,y,z} and (C-{x,y}) ∪ {z} both
/// circuits. Guaranteed to exist for supersolvable saturated matroids and
/// |C| >= 4; may be absent otherwise.
std::optional<StrongChordWitness> strong_chord_witness(const Matroid& m,
                                                       ElementSet circuit);

/// The three predicates bundled with their witnesses.
ChordalityProfile classify(const Matroid& m);

}  // namespace rotunda

#endif  // ROTUNDA_CLASSIFICATION_HPP
