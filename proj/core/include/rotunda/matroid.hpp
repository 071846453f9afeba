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

#ifndef ROTUNDA_MATROID_HPP
#define ROTUNDA_MATROID_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rotunda/element_set.hpp"
#include "rotunda/errors.hpp"

namespace rotunda {

namespace detail {
class MatroidImpl;
}

/// A closed subset together with its cached rank. Ordered by (rank, bitset),
/// the canonical ordering for all flat listings.
struct Flat {
  ElementSet elements;
  int rank = 0;

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.elements == b.elements && a.rank == b.rank;
  }
  friend bool operator<(const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.elements < b.elements;
  }
};

/// A subset paired with its rank, as reported by rank-profile dumps.
struct SubsetRank {
  ElementSet subset;
  int rank = 0;
};

/// An explicit matroid with a memoised rank oracle.
///
/// A Matroid value is either a root matroid built by one of the factory
/// functions, or a restriction view produced by restrict(). Views share the
/// root's representation and caches: the rank of S in M|X is the rank of S
/// in M, so a single rank table serves every view. Matroid values are
/// immutable and cheap to copy; all caches are internally synchronised.
class Matroid {
 public:
  /// Cycle matroid of a multigraph given as an edge list. Parallel edges
  /// become parallel elements and self-loops become loops.
  static Matroid graphic(int num_vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<std::string> element_labels = {},
                         std::vector<std::string> vertex_labels = {});

  static Matroid uniform(int rank, int size,
                         std::vector<std::string> element_labels = {});

  /// Column matroid of a matrix over GF(p), p in {2,3,5,7}. `rows` is the
  /// matrix row by row; columns are the elements.
  static Matroid linear(int field, std::vector<std::vector<int>> rows,
                        std::vector<std::string> element_labels = {});

  /// Matroid given by its full list of circuits. The circuit axioms
  /// (antichain, pairwise elimination) are validated; violations raise
  /// InputError.
  static Matroid from_circuits(int size, std::vector<ElementSet> circuits,
                               std::vector<std::string> element_labels = {});

  /// Matroid given by its full list of bases. Equicardinality and the
  /// pairwise exchange axiom are validated at construction.
  static Matroid from_bases(int size, std::vector<ElementSet> bases,
                            std::vector<std::string> element_labels = {});

  /// Direct sum; parts are re-indexed onto consecutive id ranges.
  static Matroid direct_sum(std::vector<Matroid> parts);

  /// Restriction M|X as a view sharing this matroid's rank oracle.
  Matroid restrict(ElementSet domain) const;

  /// The domain this value ranges over: the full ground set for root
  /// matroids, the restricted subset for views.
  ElementSet elements() const { return domain_; }
  int size() const { return domain_.count(); }
  /// Ground-set size of the underlying representation.
  int ground_size() const;
  bool is_view() const;

  int rank() const;
  int rank(ElementSet subset) const;
  ElementSet closure(ElementSet subset) const;
  bool is_independent(ElementSet subset) const;
  bool is_circuit(ElementSet subset) const;
  bool is_flat(ElementSet subset) const;
  bool is_spanning(ElementSet subset) const;
  /// cl(∅): the set of loops in the domain.
  ElementSet loops() const;

  /// All flats, sorted by (rank, bitset). Cached per domain; refuses
  /// domains larger than the enumeration bound.
  const std::vector<Flat>& flats() const;
  std::vector<Flat> flats_of_rank(int k) const;
  std::vector<Flat> hyperplanes() const;

  /// All circuits, sorted by bitset value. Cached per domain.
  const std::vector<ElementSet>& circuits() const;
  /// Complements of hyperplanes.
  std::vector<ElementSet> cocircuits() const;

  /// Partition of the domain into 2-connected (circuit-connected) classes;
  /// loops and coloops are singletons. Needs no enumeration bound.
  std::vector<ElementSet> connected_components() const;
  bool is_connected() const;

  const std::string& name() const { return name_; }
  Matroid named(std::string name) const;

  std::string label(int element) const;
  /// Joined labels like "{a,d,x}" for diagnostics and reports.
  std::string label_set(ElementSet subset) const;
  /// Index of the element carrying `label`, or -1.
  int element_by_label(const std::string& label) const;

  /// True when both values share the same underlying representation.
  bool same_ground(const Matroid& other) const {
    return impl_ == other.impl_;
  }

  // Introspection used by the JSON writer.
  enum class RepKind { Graphic, Uniform, Linear, Circuits, Bases, DirectSum };
  RepKind rep_kind() const;
  const detail::MatroidImpl& impl() const { return *impl_; }
  std::shared_ptr<const detail::MatroidImpl> impl_ptr() const {
    return impl_;
  }

 private:
  Matroid(std::shared_ptr<const detail::MatroidImpl> impl, ElementSet domain);

  std::shared_ptr<const detail::MatroidImpl> impl_;
  ElementSet domain_;
  std::string name_;
};

/// Flat enumeration with an optional rank filter; realises the flats
/// operation of the public surface (flats list with ranks attached).
std::vector<Flat> flats(const Matroid& m);
std::vector<Flat> flats(const Matroid& m, int rank_filter);

}  // namespace rotunda

#endif  // ROTUNDA_MATROID_HPP
