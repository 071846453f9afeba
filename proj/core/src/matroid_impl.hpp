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

// Internal representation shared by matroid.cpp and json_io.cpp.
// Not part of the installed surface.

#ifndef ROTUNDA_SRC_MATROID_IMPL_HPP
#define ROTUNDA_SRC_MATROID_IMPL_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rotunda/element_set.hpp"
#include "rotunda/matroid.hpp"

namespace rotunda {
namespace detail {

struct GraphicRep {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> vertex_labels;
};

struct UniformRep {
  int rank = 0;
};

struct LinearRep {
  int field = 2;
  int rows = 0;
  // matrix[r][c], entries already reduced mod field; columns are elements
  std::vector<std::vector<std::uint8_t>> matrix;
};

struct CircuitsRep {
  std::vector<ElementSet> circuits;  // sorted by bitset, deduplicated
};

struct BasesRep {
  std::vector<ElementSet> bases;  // sorted by bitset, deduplicated
  int basis_size = 0;
};

struct SumRep {
  std::vector<Matroid> parts;
  std::vector<int> offsets;  // offsets[i] = first element id of part i
};

class MatroidImpl {
 public:
  int n = 0;
  std::vector<std::string> labels;
  std::variant<GraphicRep, UniformRep, LinearRep, CircuitsRep, BasesRep,
               SumRep>
      rep;

  // Memoised rank; falls back to raw_rank for ground sets too large for a
  // full table. Safe under concurrent use.
  int rank_of(ElementSet x) const;
  int raw_rank(ElementSet x) const;

  const std::vector<Flat>& flats_for(ElementSet domain) const;
  const std::vector<ElementSet>& circuits_for(ElementSet domain) const;

  ElementSet closure_in(ElementSet x, ElementSet domain) const;

 private:
  void ensure_rank_table() const;
  std::vector<Flat> compute_flats(ElementSet domain) const;
  std::vector<ElementSet> compute_circuits(ElementSet domain) const;

  mutable std::once_flag table_once_;
  mutable std::vector<std::int8_t> rank_table_;
  mutable bool table_built_ = false;

  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::uint64_t,
                             std::shared_ptr<const std::vector<Flat>>>
      flats_cache_;
  mutable std::unordered_map<std::uint64_t,
                             std::shared_ptr<const std::vector<ElementSet>>>
      circuits_cache_;
};

}  // namespace detail
}  // namespace rotunda

#endif  // ROTUNDA_SRC_MATROID_IMPL_HPP
