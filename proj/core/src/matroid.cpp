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

#include "rotunda/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <unordered_set>

#include "matroid_impl.hpp"

namespace rotunda {
namespace detail {
namespace {

// Full rank tables are built only below this ground-set size (1 MiB of
// int8 at n = 20). Larger matroids answer rank queries directly.
constexpr int kRankTableMaxN = 20;

int graphic_rank(const GraphicRep& g, ElementSet x) {
  // |V(X)| - #components of the edge-induced subgraph, via union-find.
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int rank = 0;
  for (int e : x) {
    int a = find(g.edges[e].first);
    int b = find(g.edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

int linear_rank(const LinearRep& rep, ElementSet x) {
  const int p = rep.field;
  std::vector<std::vector<int>> cols;
  cols.reserve(x.count());
  for (int e : x) {
    std::vector<int> col(rep.rows);
    for (int r = 0; r < rep.rows; ++r) col[r] = rep.matrix[r][e];
    cols.push_back(std::move(col));
  }
  int rank = 0;
  for (int r = 0; r < rep.rows && rank < static_cast<int>(cols.size()); ++r) {
    int pivot = -1;
    for (int c = rank; c < static_cast<int>(cols.size()); ++c) {
      if (cols[c][r] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(cols[rank], cols[pivot]);
    // normalise pivot column and eliminate the row from the others
    int inv = 1;
    for (int k = 1; k < p; ++k) {
      if ((cols[rank][r] * k) % p == 1) inv = k;
    }
    for (int& v : cols[rank]) v = (v * inv) % p;
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
      if (c == rank || cols[c][r] == 0) continue;
      int factor = cols[c][r];
      for (int rr = 0; rr < rep.rows; ++rr) {
        cols[c][rr] = ((cols[c][rr] - factor * cols[rank][rr]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

bool contains_member(const std::vector<ElementSet>& family, ElementSet s) {
  for (ElementSet c : family) {
    if (c.subset_of(s)) return true;
  }
  return false;
}

int circuits_rank(const CircuitsRep& rep, ElementSet x) {
  // Greedy augmentation; correct because the circuit axioms were validated
  // at construction, so every maximal independent subset is maximum.
  ElementSet indep;
  for (int e : x) {
    if (!contains_member(rep.circuits, indep.with(e))) indep = indep.with(e);
  }
  return indep.count();
}

int bases_rank(const BasesRep& rep, ElementSet x) {
  int best = 0;
  for (ElementSet b : rep.bases) best = std::max(best, (b & x).count());
  return best;
}

}  // namespace

int MatroidImpl::raw_rank(ElementSet x) const {
  return std::visit(
      [&](const auto& rep) -> int {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, GraphicRep>) {
          return graphic_rank(rep, x);
        } else if constexpr (std::is_same_v<T, UniformRep>) {
          return std::min(x.count(), rep.rank);
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          return linear_rank(rep, x);
        } else if constexpr (std::is_same_v<T, CircuitsRep>) {
          return circuits_rank(rep, x);
        } else if constexpr (std::is_same_v<T, BasesRep>) {
          return bases_rank(rep, x);
        } else {
          static_assert(std::is_same_v<T, SumRep>);
          int total = 0;
          for (std::size_t i = 0; i < rep.parts.size(); ++i) {
            const Matroid& part = rep.parts[i];
            ElementSet slice(
                (x.bits() >> rep.offsets[i]) &
                ElementSet::full(part.ground_size()).bits());
            total += part.rank(slice);
          }
          return total;
        }
      },
      rep);
}

void MatroidImpl::ensure_rank_table() const {
  std::call_once(table_once_, [this] {
    if (n > kRankTableMaxN) return;
    std::uint64_t count = std::uint64_t{1} << n;
    rank_table_.resize(count);
    for (std::uint64_t s = 0; s < count; ++s) {
      rank_table_[s] = static_cast<std::int8_t>(raw_rank(ElementSet(s)));
    }
    table_built_ = true;
  });
}

int MatroidImpl::rank_of(ElementSet x) const {
  ensure_rank_table();
  if (table_built_) return rank_table_[x.bits()];
  return raw_rank(x);
}

ElementSet MatroidImpl::closure_in(ElementSet x, ElementSet domain) const {
  int r = rank_of(x);
  ElementSet out = x;
  for (int e : domain - x) {
    if (rank_of(x.with(e)) == r) out = out.with(e);
  }
  return out;
}

std::vector<Flat> MatroidImpl::compute_flats(ElementSet domain) const {
  check_enumeration_bound(domain.count(), "flats");
  ElementSet full = ElementSet::full(n);
  if (domain != full && n <= enumeration_bound()) {
    // flats of M|X are the intersections of the flats of M with X
    const std::vector<Flat>& parent = flats_for(full);
    std::set<ElementSet> seen;
    std::vector<Flat> all;
    for (const Flat& f : parent) {
      ElementSet cut = f.elements & domain;
      if (seen.insert(cut).second) all.push_back({cut, rank_of(cut)});
    }
    std::sort(all.begin(), all.end());
    return all;
  }
  // lattice climb: close the empty set, then close covers level by level
  std::vector<Flat> all;
  std::set<ElementSet> level;
  level.insert(closure_in(ElementSet::empty(), domain));
  int rank = 0;
  while (!level.empty()) {
    std::set<ElementSet> next;
    for (ElementSet f : level) {
      all.push_back({f, rank});
      for (int e : domain - f) next.insert(closure_in(f.with(e), domain));
    }
    level = std::move(next);
    ++rank;
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<ElementSet> MatroidImpl::compute_circuits(
    ElementSet domain) const {
  check_enumeration_bound(domain.count(), "circuits");
  std::vector<ElementSet> out;
  for_each_subset(domain, [&](ElementSet s) {
    int size = s.count();
    if (size == 0) return;
    if (rank_of(s) != size - 1) return;
    for (int e : s) {
      if (rank_of(s.without(e)) != size - 1) return;
    }
    out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Flat>& MatroidImpl::flats_for(ElementSet domain) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = flats_cache_.find(domain.bits());
    if (it != flats_cache_.end()) return *it->second;
  }
  auto computed =
      std::make_shared<const std::vector<Flat>>(compute_flats(domain));
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto [it, inserted] = flats_cache_.emplace(domain.bits(), computed);
  return *it->second;
}

const std::vector<ElementSet>& MatroidImpl::circuits_for(
    ElementSet domain) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = circuits_cache_.find(domain.bits());
    if (it != circuits_cache_.end()) return *it->second;
  }
  auto computed = std::make_shared<const std::vector<ElementSet>>(
      compute_circuits(domain));
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto [it, inserted] = circuits_cache_.emplace(domain.bits(), computed);
  return *it->second;
}

}  // namespace detail

namespace {

std::vector<std::string> default_labels(int n, const char* prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

void require_unique(const std::vector<std::string>& labels,
                    const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw InputError(std::string("duplicate ") + what + " label: " + l);
    }
  }
}

std::vector<std::string> resolve_labels(std::vector<std::string> labels,
                                        int n, const char* prefix) {
  if (labels.empty()) return default_labels(n, prefix);
  if (static_cast<int>(labels.size()) != n) {
    throw InputError("label list size does not match ground-set size");
  }
  require_unique(labels, "element");
  return labels;
}

void check_in_range(const std::vector<ElementSet>& family, int n,
                    const char* what) {
  ElementSet full = ElementSet::full(n);
  for (ElementSet s : family) {
    if (!s.subset_of(full)) {
      throw InputError(std::string(what) +
                       " contains an out-of-range element id");
    }
  }
}

std::vector<ElementSet> sorted_unique(std::vector<ElementSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

void validate_circuit_axioms(const std::vector<ElementSet>& circuits) {
  for (ElementSet c : circuits) {
    if (c.is_empty()) throw InputError("the empty set cannot be a circuit");
  }
  // antichain
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && circuits[i].subset_of(circuits[j])) {
        throw InputError("circuit " + circuits[i].to_string() +
                         " is contained in circuit " +
                         circuits[j].to_string());
      }
    }
  }
  // pairwise elimination
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      ElementSet common = circuits[i] & circuits[j];
      if (common.is_empty()) continue;
      ElementSet both = circuits[i] | circuits[j];
      for (int e : common) {
        ElementSet target = both.without(e);
        bool found = false;
        for (ElementSet c : circuits) {
          if (c.subset_of(target)) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw InputError(
              "circuit elimination fails for " + circuits[i].to_string() +
              " and " + circuits[j].to_string() + " at element " +
              std::to_string(e));
        }
      }
    }
  }
}

void validate_basis_axioms(const std::vector<ElementSet>& bases) {
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  int size = bases[0].count();
  for (ElementSet b : bases) {
    if (b.count() != size) {
      throw InputError("bases are not equicardinal");
    }
  }
  std::unordered_set<std::uint64_t> lookup;
  for (ElementSet b : bases) lookup.insert(b.bits());
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      for (int x : b1 - b2) {
        bool found = false;
        for (int y : b2 - b1) {
          if (lookup.count(b1.without(x).with(y).bits())) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw InputError("basis exchange fails for " + b1.to_string() +
                           ", " + b2.to_string() + " at element " +
                           std::to_string(x));
        }
      }
    }
  }
}

}  // namespace

Matroid::Matroid(std::shared_ptr<const detail::MatroidImpl> impl,
                 ElementSet domain)
    : impl_(std::move(impl)), domain_(domain) {}

Matroid Matroid::graphic(int num_vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<std::string> element_labels,
                         std::vector<std::string> vertex_labels) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw InputError("edge endpoint out of range");
    }
  }
  int n = static_cast<int>(edges.size());
  if (n > 64) throw InputError("at most 64 elements are supported");
  auto impl = std::make_shared<detail::MatroidImpl>();
  impl->n = n;
  detail::GraphicRep rep;
  rep.num_vertices = num_vertices;
  rep.edges = std::move(edges);
  rep.vertex_labels = vertex_labels.empty()
                          ? default_labels(num_vertices, "v")
                          : std::move(vertex_labels);
  if (static_cast<int>(rep.vertex_labels.size()) != num_vertices) {
    throw InputError("vertex label list size mismatch");
  }
  require_unique(rep.vertex_labels, "vertex");
  if (element_labels.empty()) {
    // label each edge by its endpoints, disambiguating parallel copies
    std::unordered_set<std::string> used;
    for (auto [u, v] : rep.edges) {
      std::string base =
          rep.vertex_labels[std::min(u, v)] + "-" + rep.vertex_labels[std::max(u, v)];
      std::string label = base;
      int copy = 1;
      while (!used.insert(label).second) {
        label = base + "#" + std::to_string(++copy);
      }
      element_labels.push_back(label);
    }
  }
  impl->labels = resolve_labels(std::move(element_labels), n, "e");
  impl->rep = std::move(rep);
  return Matroid(std::move(impl), ElementSet::full(n));
}

Matroid Matroid::uniform(int rank, int size,
                         std::vector<std::string> element_labels) {
  if (size < 0 || size > 64) throw InputError("uniform matroid size out of range");
  if (rank < 0 || rank > size) {
    throw InputError("uniform matroid needs 0 <= rank <= size");
  }
  auto impl = std::make_shared<detail::MatroidImpl>();
  impl->n = size;
  impl->labels = resolve_labels(std::move(element_labels), size, "e");
  impl->rep = detail::UniformRep{rank};
  return Matroid(std::move(impl), ElementSet::full(size));
}

Matroid Matroid::linear(int field, std::vector<std::vector<int>> rows,
                        std::vector<std::string> element_labels) {
  if (field != 2 && field != 3 && field != 5 && field != 7) {
    throw InputError("field must be one of 2, 3, 5, 7");
  }
  int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  if (n > 64) throw InputError("at most 64 elements are supported");
  detail::LinearRep rep;
  rep.field = field;
  rep.rows = static_cast<int>(rows.size());
  rep.matrix.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      throw InputError("matrix rows have unequal lengths");
    }
    rep.matrix[r].resize(n);
    for (int c = 0; c < n; ++c) {
      rep.matrix[r][c] =
          static_cast<std::uint8_t>(((rows[r][c] % field) + field) % field);
    }
  }
  auto impl = std::make_shared<detail::MatroidImpl>();
  impl->n = n;
  impl->labels = resolve_labels(std::move(element_labels), n, "e");
  impl->rep = std::move(rep);
  return Matroid(std::move(impl), ElementSet::full(n));
}

Matroid Matroid::from_circuits(int size, std::vector<ElementSet> circuits,
                               std::vector<std::string> element_labels) {
  if (size < 0 || size > 64) throw InputError("ground-set size out of range");
  circuits = sorted_unique(std::move(circuits));
  check_in_range(circuits, size, "circuit");
  validate_circuit_axioms(circuits);
  auto impl = std::make_shared<detail::MatroidImpl>();
  impl->n = size;
  impl->labels = resolve_labels(std::move(element_labels), size, "e");
  impl->rep = detail::CircuitsRep{std::move(circuits)};
  return Matroid(std::move(impl), ElementSet::full(size));
}

Matroid Matroid::from_bases(int size, std::vector<ElementSet> bases,
                            std::vector<std::string> element_labels) {
  if (size < 0 || size > 64) throw InputError("ground-set size out of range");
  bases = sorted_unique(std::move(bases));
  check_in_range(bases, size, "basis");
  validate_basis_axioms(bases);
  detail::BasesRep rep;
  rep.basis_size = bases[0].count();
  rep.bases = std::move(bases);
  auto impl = std::make_shared<detail::MatroidImpl>();
  impl->n = size;
  impl->labels = resolve_labels(std::move(element_labels), size, "e");
  impl->rep = std::move(rep);
  return Matroid(std::move(impl), ElementSet::full(size));
}

Matroid Matroid::direct_sum(std::vector<Matroid> parts) {
  detail::SumRep rep;
  std::vector<std::string> labels;
  int offset = 0;
  for (const Matroid& part : parts) {
    if (part.is_view()) {
      throw InputError("direct_sum expects root matroids, not views");
    }
    rep.parts.push_back(part);
    rep.offsets.push_back(offset);
    offset += part.ground_size();
  }
  if (offset > 64) throw InputError("at most 64 elements are supported");
  // keep original labels when globally unique, else qualify by part index
  std::unordered_set<std::string> seen;
  bool collision = false;
  for (const Matroid& part : parts) {
    for (int e = 0; e < part.ground_size(); ++e) {
      if (!seen.insert(part.label(e)).second) collision = true;
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int e = 0; e < parts[i].ground_size(); ++e) {
      labels.push_back(collision
                           ? std::to_string(i) + ":" + parts[i].label(e)
                           : parts[i].label(e));
    }
  }
  auto impl = std::make_shared<detail::MatroidImpl>();
  impl->n = offset;
  impl->labels = std::move(labels);
  impl->rep = std::move(rep);
  return Matroid(std::move(impl), ElementSet::full(offset));
}

Matroid Matroid::restrict(ElementSet domain) const {
  if (!domain.subset_of(domain_)) {
    throw InputError("restriction domain is not a subset of the ground set");
  }
  Matroid view(impl_, domain);
  view.name_ = name_;
  return view;
}

int Matroid::ground_size() const { return impl_->n; }

bool Matroid::is_view() const {
  return domain_ != ElementSet::full(impl_->n);
}

int Matroid::rank() const { return impl_->rank_of(domain_); }

int Matroid::rank(ElementSet subset) const {
  assert(subset.subset_of(domain_));
  return impl_->rank_of(subset);
}

ElementSet Matroid::closure(ElementSet subset) const {
  assert(subset.subset_of(domain_));
  return impl_->closure_in(subset, domain_);
}

bool Matroid::is_independent(ElementSet subset) const {
  return rank(subset) == subset.count();
}

bool Matroid::is_circuit(ElementSet subset) const {
  int size = subset.count();
  if (size == 0 || rank(subset) != size - 1) return false;
  for (int e : subset) {
    if (rank(subset.without(e)) != size - 1) return false;
  }
  return true;
}

bool Matroid::is_flat(ElementSet subset) const {
  return closure(subset) == subset;
}

bool Matroid::is_spanning(ElementSet subset) const {
  return rank(subset) == rank();
}

ElementSet Matroid::loops() const { return closure(ElementSet::empty()); }

const std::vector<Flat>& Matroid::flats() const {
  return impl_->flats_for(domain_);
}

std::vector<Flat> Matroid::flats_of_rank(int k) const {
  std::vector<Flat> out;
  for (const Flat& f : flats()) {
    if (f.rank == k) out.push_back(f);
  }
  return out;
}

std::vector<Flat> Matroid::hyperplanes() const {
  return flats_of_rank(rank() - 1);
}

const std::vector<ElementSet>& Matroid::circuits() const {
  return impl_->circuits_for(domain_);
}

std::vector<ElementSet> Matroid::cocircuits() const {
  std::vector<ElementSet> out;
  for (const Flat& h : hyperplanes()) out.push_back(domain_ - h.elements);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> Matroid::connected_components() const {
  // Union-find over the fundamental circuits of one greedy basis; the
  // fundamental graph of a basis has the same components as the matroid.
  std::vector<int> parent(64);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  ElementSet basis;
  for (int e : domain_) {
    if (rank(basis.with(e)) > rank(basis)) basis = basis.with(e);
  }
  int basis_rank = basis.count();
  for (int e : domain_ - basis) {
    if (rank(ElementSet::single(e)) == 0) continue;  // loop: singleton
    ElementSet with_e = basis.with(e);
    int prev = -1;
    for (int b : basis) {
      if (rank(with_e.without(b)) == basis_rank) {
        // b is in the fundamental circuit of e
        unite(e, b);
        if (prev >= 0) unite(prev, b);
        prev = b;
      }
    }
  }
  std::vector<ElementSet> classes;
  for (int e : domain_) {
    int root = find(e);
    bool placed = false;
    for (ElementSet& c : classes) {
      if (!c.is_empty() && find(c.lowest()) == root) {
        c = c.with(e);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(ElementSet::single(e));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

bool Matroid::is_connected() const {
  return connected_components().size() <= 1;
}

Matroid Matroid::named(std::string name) const {
  Matroid copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string Matroid::label(int element) const {
  return impl_->labels[element];
}

std::string Matroid::label_set(ElementSet subset) const {
  std::string out = "{";
  bool first = true;
  for (int e : subset) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  }
  return out + "}";
}

int Matroid::element_by_label(const std::string& label) const {
  for (int e = 0; e < impl_->n; ++e) {
    if (impl_->labels[e] == label) return e;
  }
  return -1;
}

Matroid::RepKind Matroid::rep_kind() const {
  return std::visit(
      [](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, detail::GraphicRep>) {
          return RepKind::Graphic;
        } else if constexpr (std::is_same_v<T, detail::UniformRep>) {
          return RepKind::Uniform;
        } else if constexpr (std::is_same_v<T, detail::LinearRep>) {
          return RepKind::Linear;
        } else if constexpr (std::is_same_v<T, detail::CircuitsRep>) {
          return RepKind::Circuits;
        } else if constexpr (std::is_same_v<T, detail::BasesRep>) {
          return RepKind::Bases;
        } else {
          return RepKind::DirectSum;
        }
      },
      impl_->rep);
}

std::vector<Flat> flats(const Matroid& m) { return m.flats(); }

std::vector<Flat> flats(const Matroid& m, int rank_filter) {
  return m.flats_of_rank(rank_filter);
}

}  // namespace rotunda
