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

#ifndef ROTUNDA_ELEMENT_SET_HPP
#define ROTUNDA_ELEMENT_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rotunda {

/// A subset of a ground set with at most 64 elements, stored as a bitset.
/// Element ids are 0-based. Value type; totally ordered by bit value, which
/// is the canonical ordering used for deterministic output everywhere.
class ElementSet {
 public:
  constexpr ElementSet() : bits_(0) {}
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> ids) : bits_(0) {
    for (int e : ids) bits_ |= (std::uint64_t{1} << e);
  }

  static constexpr ElementSet empty() { return ElementSet(); }
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet single(int e) {
    return ElementSet(std::uint64_t{1} << e);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int e) const {
    return (bits_ >> e) & std::uint64_t{1};
  }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }

  constexpr ElementSet with(int e) const {
    return ElementSet(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << e));
  }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool subset_of(ElementSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElementSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool intersects(ElementSet o) const {
    return (bits_ & o.bits_) != 0;
  }

  /// Smallest element id; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr auto operator<=>(const ElementSet&) const = default;

  /// Iterates over element ids in increasing order.
  class iterator {
   public:
    explicit iterator(std::uint64_t bits) : bits_(bits) {}
    int operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint64_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{0,3,5}" built from ids, for diagnostics.
  std::string to_string() const;

 private:
  std::uint64_t bits_;
};

/// Visits every subset of `mask`, including the empty set and `mask` itself.
template <typename Fn>
void for_each_subset(ElementSet mask, Fn&& fn) {
  std::uint64_t m = mask.bits();
  std::uint64_t s = 0;
  while (true) {
    fn(ElementSet(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

}  // namespace rotunda

#endif  // ROTUNDA_ELEMENT_SET_HPP
