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

#include "rotunda/roundness.hpp"

#include <algorithm>

namespace rotunda {

std::optional<VerticalCover> vertical_cover_witness(const Matroid& m,
                                                    ElementSet subset) {
  Matroid view = m.restrict(subset);
  int r = view.rank();
  if (r == 0) return std::nullopt;
  // A vertical separation exists iff the complement of some hyperplane of
  // M|X fails to span M|X.
  for (const Flat& h : view.hyperplanes()) {
    ElementSet rest = subset - h.elements;
    if (view.rank(rest) < r) {
      ElementSet other = view.closure(rest);
      return VerticalCover{{h.elements, h.rank}, {other, view.rank(other)}};
    }
  }
  return std::nullopt;
}

bool is_round(const Matroid& m, ElementSet subset) {
  return !vertical_cover_witness(m, subset).has_value();
}

std::vector<VerticalCover> vertical_separations(const Matroid& m) {
  std::vector<VerticalCover> out;
  ElementSet ground = m.elements();
  const std::vector<Flat>& all = m.flats();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].elements == ground) continue;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[j].elements == ground) continue;
      if ((all[i].elements | all[j].elements) == ground) {
        out.push_back({all[i], all[j]});
      }
    }
  }
  return out;
}

std::vector<Flat> round_flats(const Matroid& m) {
  std::vector<Flat> out;
  for (const Flat& f : m.flats()) {
    if (is_round(m, f.elements)) out.push_back(f);
  }
  return out;
}

std::vector<Flat> rotunda(const Matroid& m) {
  std::vector<Flat> round = round_flats(m);
  std::vector<Flat> out;
  for (const Flat& f : round) {
    bool maximal = true;
    for (const Flat& g : round) {
      if (f.elements.proper_subset_of(g.elements)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rotunda
