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

#ifndef ROTUNDA_ROUNDNESS_HPP
#define ROTUNDA_ROUNDNESS_HPP

#include <optional>
#include <vector>

#include "rotunda/matroid.hpp"

namespace rotunda {

/// A pair of proper flats whose union is the ground set; the witness that
/// a matroid is not round.
struct VerticalCover {
  Flat first;
  Flat second;

  friend bool operator==(const VerticalCover& a, const VerticalCover& b) {
    return a.first == b.first && a.second == b.second;
  }
};

/// True when M|X has no vertical cover. Uses the hyperplane criterion: X is
/// round iff X - H spans M|X for every hyperplane H of M|X (equivalent to
/// the bipartition form, cross-checked in the test suite).
bool is_round(const Matroid& m, ElementSet subset);

/// A vertical cover of M|X when one exists.
std::optional<VerticalCover> vertical_cover_witness(const Matroid& m,
                                                    ElementSet subset);

/// All vertical covers of M itself.
std::vector<VerticalCover> vertical_separations(const Matroid& m);

/// Flats F with M|F round, canonical order.
std::vector<Flat> round_flats(const Matroid& m);

/// Maximal round flats, sorted by (rank, bitset).
std::vector<Flat> rotunda(const Matroid& m);

}  // namespace rotunda

#endif  // ROTUNDA_ROUNDNESS_HPP
