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

#include "rotunda/modularity.hpp"

#include <algorithm>

namespace rotunda {

bool is_modular_flat(const Matroid& m, ElementSet flat) {
  if (!m.is_flat(flat)) {
    throw InputError("is_modular_flat: " + m.label_set(flat) +
                     " is not a flat");
  }
  ElementSet loops = m.loops();
  int rank_f = m.rank(flat);
  for (const Flat& other : m.flats()) {
    if (!((flat & other.elements) - loops).is_empty()) continue;
    if (rank_f + other.rank != m.rank(flat | other.elements)) return false;
  }
  return true;
}

std::vector<Flat> modular_flats(const Matroid& m) {
  std::vector<Flat> out;
  for (const Flat& f : m.flats()) {
    if (is_modular_flat(m, f.elements)) out.push_back(f);
  }
  return out;
}

bool hyperplane_modular_by_line_criterion(const Matroid& m,
                                          ElementSet hyperplane) {
  for (const Flat& line : m.flats_of_rank(2)) {
    if (line.elements.subset_of(hyperplane)) continue;
    if (m.rank(line.elements & hyperplane) != 1) return false;
  }
  return true;
}

std::vector<Flat> modular_hyperplanes(const Matroid& m) {
  std::vector<Flat> out;
  for (const Flat& h : m.hyperplanes()) {
    if (hyperplane_modular_by_line_criterion(m, h.elements)) out.push_back(h);
  }
  return out;
}

Projection projection(const Matroid& m, ElementSet hyperplane, int x,
                      int y) {
  if (!m.is_flat(hyperplane) || m.rank(hyperplane) != m.rank() - 1 ||
      !is_modular_flat(m, hyperplane)) {
    throw HypothesisError("projection: not a modular hyperplane: " +
                          m.label_set(hyperplane));
  }
  if (hyperplane.contains(x) || hyperplane.contains(y)) {
    throw HypothesisError("projection: element lies in the hyperplane");
  }
  ElementSet pair = ElementSet::single(x).with(y);
  if (m.rank(pair) != 2) {
    throw HypothesisError(
        "projection: elements are parallel (or loops); r({x,y}) must be 2");
  }
  ElementSet image = hyperplane & m.closure(pair);
  Projection result;
  result.hyperplane = {hyperplane, m.rank(hyperplane)};
  result.x = x;
  result.y = y;
  result.image = {image, m.rank(image)};
  if (result.image.rank != 1) {
    throw Error("projection: image has rank " +
                std::to_string(result.image.rank) + ", expected 1");
  }
  return result;
}

std::vector<ModularCover> modular_covers(const Matroid& m) {
  std::vector<Flat> mods = modular_flats(m);
  ElementSet ground = m.elements();
  std::vector<ModularCover> out;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (mods[i].elements == ground) continue;
    for (std::size_t j = i + 1; j < mods.size(); ++j) {
      if (mods[j].elements == ground) continue;
      if ((mods[i].elements | mods[j].elements) == ground) {
        out.push_back({mods[i], mods[j]});
      }
    }
  }
  return out;
}

}  // namespace rotunda
