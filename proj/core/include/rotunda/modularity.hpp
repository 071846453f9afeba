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

#ifndef ROTUNDA_MODULARITY_HPP
#define ROTUNDA_MODULARITY_HPP

#include <vector>

#include "rotunda/matroid.hpp"

namespace rotunda {

/// An unordered pair of proper modular flats whose union is the ground set,
/// stored with first < second in the canonical flat order.
struct ModularCover {
  Flat first;
  Flat second;

  friend bool operator==(const ModularCover& a, const ModularCover& b) {
    return a.first == b.first && a.second == b.second;
  }
};

/// The projection of two elements outside a modular hyperplane onto it:
/// the rank-one flat H ∩ cl({x,y}).
struct Projection {
  Flat hyperplane;
  int x = 0;
  int y = 0;
  Flat image;
};

/// A flat F is modular when r(F) + r(F') = r(F ∪ F') for every flat F'
/// meeting F only in loops. Matroids with loops are handled by treating
/// "disjoint" as disjoint-after-loop-stripping; ranks are unaffected.
/// Throws InputError when `flat` is not closed.
bool is_modular_flat(const Matroid& m, ElementSet flat);

/// All modular flats, in canonical (rank, bitset) order.
std::vector<Flat> modular_flats(const Matroid& m);

/// Modular flats of rank r(M)-1; computed with the rank-two-flat
/// intersection criterion. Agreement with is_modular_flat is a tested
/// invariant.
std::vector<Flat> modular_hyperplanes(const Matroid& m);

/// Whether a hyperplane meets every rank-2 flat not inside it in rank one.
bool hyperplane_modular_by_line_criterion(const Matroid& m,
                                          ElementSet hyperplane);

/// P_H(x,y). Preconditions are reported distinctly: H must be a modular
/// hyperplane, x and y must avoid H, and r({x,y}) must be 2.
Projection projection(const Matroid& m, ElementSet hyperplane, int x, int y);

/// All modular covers, each unordered pair emitted once.
std::vector<ModularCover> modular_covers(const Matroid& m);

}  // namespace rotunda

#endif  // ROTUNDA_MODULARITY_HPP
