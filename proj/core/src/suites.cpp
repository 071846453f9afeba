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

#include "rotunda/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "rotunda/catalog.hpp"
#include "rotunda/classification.hpp"
#include "rotunda/correspondence.hpp"
#include "rotunda/modularity.hpp"
#include "rotunda/roundness.hpp"
#include "rotunda/rotunda_graph.hpp"
#include "rotunda/treewidth.hpp"

namespace rotunda {
namespace checks {

namespace {

using Clock = std::chrono::steady_clock;

class Reporter {
 public:
  explicit Reporter(std::string name) : name_(std::move(name)) {}

  /// Records the first failure; later failures are ignored.
  void fail(const std::string& detail) {
    if (ok_) {
      ok_ = false;
      detail_ = detail;
    }
  }
  bool ok() const { return ok_; }

  CheckResult finish() const {
    CheckResult result;
    result.name = name_;
    result.pass = ok_;
    result.detail = detail_;
    result.seconds =
        std::chrono::duration<double>(Clock::now() - start_).count();
    return result;
  }

 private:
  std::string name_;
  bool ok_ = true;
  std::string detail_;
  Clock::time_point start_ = Clock::now();
};

std::vector<CatalogEntry> entries_with_at_most(const SuiteOptions& o,
                                               int max_elements) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : catalog(o.graph_max_n)) {
    if (e.matroid.size() <= max_elements) out.push_back(e);
  }
  return out;
}

/// P = union of P_H(x,y) over pairs x,y in xs with r({x,y}) = 2.
ElementSet projection_union(const Matroid& m, ElementSet hyperplane,
                            ElementSet xs) {
  ElementSet p;
  for (int x : xs) {
    for (int y : xs) {
      if (y <= x) continue;
      ElementSet pair{x, y};
      if (m.rank(pair) == 2) p |= (hyperplane & m.closure(pair));
    }
  }
  return p;
}

bool graph_of_edges_connected(int nodes,
                              const std::vector<std::pair<int, int>>& edges) {
  if (nodes <= 1) return true;
  std::vector<int> parent(nodes);
  for (int i = 0; i < nodes; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (int v = 1; v < nodes; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- axioms

CheckResult rank_axioms(const SuiteOptions& o) {
  Reporter rep("rank-axioms");
  for (const CatalogEntry& entry : entries_with_at_most(o, 10)) {
    // exhaustive pairs only up to the lemma bound; fixtures up to 10 get
    // the single-set axioms plus sampled pairs below
    const Matroid& m = entry.matroid;
    ElementSet ground = m.elements();
    if (m.rank(ElementSet::empty()) != 0) {
      rep.fail(entry.name + ": r(empty) != 0");
    }
    for_each_subset(ground, [&](ElementSet x) {
      if (!rep.ok()) return;
      int r = m.rank(x);
      if (r > x.count() || r < 0) {
        rep.fail(entry.name + ": rank out of range on " + m.label_set(x));
      }
      for (int e : ground - x) {
        int r2 = m.rank(x.with(e));
        if (r2 < r || r2 > r + 1) {
          rep.fail(entry.name + ": unit increase fails on " +
                   m.label_set(x));
        }
      }
    });
    if (m.size() <= o.lemma_element_bound || m.size() <= 9) {
      for_each_subset(ground, [&](ElementSet a) {
        if (!rep.ok()) return;
        for_each_subset(ground, [&](ElementSet b) {
          if (!rep.ok()) return;
          if (m.rank(a) + m.rank(b) < m.rank(a | b) + m.rank(a & b)) {
            rep.fail(entry.name + ": submodularity fails on " +
                     m.label_set(a) + ", " + m.label_set(b));
          }
        });
      });
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult closure_axioms(const SuiteOptions& o) {
  Reporter rep("closure-axioms");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    ElementSet ground = m.elements();
    for_each_subset(ground, [&](ElementSet x) {
      if (!rep.ok()) return;
      ElementSet cl = m.closure(x);
      if (!x.subset_of(cl)) rep.fail(entry.name + ": closure not extensive");
      if (m.closure(cl) != cl) {
        rep.fail(entry.name + ": closure not idempotent on " +
                 m.label_set(x));
      }
      if (m.rank(cl) != m.rank(x)) {
        rep.fail(entry.name + ": closure changed the rank of " +
                 m.label_set(x));
      }
      // monotone over subsets of x
      for_each_subset(x, [&](ElementSet a) {
        if (!rep.ok()) return;
        if (!m.closure(a).subset_of(cl)) {
          rep.fail(entry.name + ": closure not monotone at " +
                   m.label_set(a) + " inside " + m.label_set(x));
        }
      });
    });
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult circuit_ranks(const SuiteOptions& o) {
  Reporter rep("circuit-ranks");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (ElementSet c : m.circuits()) {
      if (m.rank(c) != c.count() - 1) {
        rep.fail(entry.name + ": circuit " + m.label_set(c) +
                 " has rank != |C|-1");
      }
      for (int e : c) {
        if (!m.is_independent(c.without(e))) {
          rep.fail(entry.name + ": proper subset of circuit " +
                   m.label_set(c) + " is dependent");
        }
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult direct_sum_rank_additivity(const SuiteOptions& o) {
  Reporter rep("direct-sum-rank-additivity");
  std::vector<CatalogEntry> small = entries_with_at_most(o, 4);
  for (std::size_t i = 0; i < small.size() && rep.ok(); ++i) {
    for (std::size_t j = i; j < small.size() && rep.ok(); ++j) {
      const Matroid& a = small[i].matroid;
      const Matroid& b = small[j].matroid;
      if (a.size() + b.size() > o.lemma_element_bound) continue;
      Matroid sum = Matroid::direct_sum({a, b});
      int offset = a.ground_size();
      for_each_subset(sum.elements(), [&](ElementSet x) {
        if (!rep.ok()) return;
        ElementSet xa(x.bits() & ElementSet::full(offset).bits());
        ElementSet xb(x.bits() >> offset);
        if (sum.rank(x) != a.rank(xa) + b.rank(xb)) {
          rep.fail(small[i].name + " (+) " + small[j].name +
                   ": rank not additive on " + x.to_string());
        }
      });
    }
  }
  return rep.finish();
}

CheckResult dual_k33_circuits_are_bonds(const SuiteOptions&) {
  Reporter rep("dual-k33-circuits-are-bonds");
  Matroid m = dual_k33();
  if (m.rank() != 4) rep.fail("M*(K3,3) must have rank 4");

  // independent bond enumeration over the actual K_{3,3} graph
  SimpleGraph k33 = SimpleGraph::with_vertex_count(6);
  for (int l = 0; l < 3; ++l) {
    for (int r = 3; r < 6; ++r) k33.add_edge(l, r);
  }
  std::vector<std::pair<int, int>> edges = k33.edges();
  std::set<ElementSet> bonds;
  for_each_subset(k33.vertices(), [&](VertexSet s) {
    if (s.is_empty() || s == k33.vertices() || !s.contains(0)) return;
    VertexSet t = k33.vertices() - s;
    auto connected = [&](VertexSet side) {
      return k33.reachable(VertexSet::single(side.lowest()),
                           k33.vertices() - side) == side;
    };
    if (!connected(s) || !connected(t)) return;
    ElementSet cut;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (s.contains(edges[e].first) != s.contains(edges[e].second)) {
        cut = cut.with(static_cast<int>(e));
      }
    }
    bonds.insert(cut);
  });

  std::set<ElementSet> circuits(m.circuits().begin(), m.circuits().end());
  if (circuits != bonds) {
    rep.fail("circuits of M*(K3,3) differ from the minimal edge cuts");
  }
  return rep.finish();
}

CheckResult connected_components_agree_with_circuits(const SuiteOptions& o) {
  Reporter rep("connected-components-vs-circuits");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    // oracle: union-find over all circuits
    std::map<int, int> cls;
    for (int e : m.elements()) cls[e] = e;
    std::function<int(int)> find = [&](int v) {
      while (cls[v] != v) v = cls[v] = cls[cls[v]];
      return v;
    };
    for (ElementSet c : m.circuits()) {
      int first = c.lowest();
      for (int e : c) cls[find(e)] = find(first);
    }
    std::map<int, ElementSet> grouped;
    for (int e : m.elements()) grouped[find(e)] |= ElementSet::single(e);
    std::vector<ElementSet> expected;
    for (auto& [root, members] : grouped) expected.push_back(members);
    std::sort(expected.begin(), expected.end());
    if (m.connected_components() != expected) {
      rep.fail(entry.name + ": component partition mismatch");
      break;
    }
  }
  return rep.finish();
}

// ---------------------------------------------------- modularity lemmas

CheckResult modular_intersection_and_restriction(const SuiteOptions& o) {
  Reporter rep("modular-intersection-and-restriction");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    std::vector<Flat> mods = modular_flats(m);
    for (std::size_t i = 0; i < mods.size() && rep.ok(); ++i) {
      for (std::size_t j = i + 1; j < mods.size() && rep.ok(); ++j) {
        ElementSet inter = mods[i].elements & mods[j].elements;
        if (!m.is_flat(inter) || !is_modular_flat(m, inter)) {
          rep.fail(entry.name + ": intersection of modular flats " +
                   m.label_set(mods[i].elements) + ", " +
                   m.label_set(mods[j].elements) + " is not modular");
        }
      }
    }
    for (const Flat& f : mods) {
      if (!rep.ok()) break;
      for_each_subset(m.elements() - f.elements, [&](ElementSet extra) {
        if (!rep.ok()) return;
        ElementSet x = f.elements | extra;
        if (!is_modular_flat(m.restrict(x), f.elements)) {
          rep.fail(entry.name + ": " + m.label_set(f.elements) +
                   " stops being modular in the restriction to " +
                   m.label_set(x));
        }
      });
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult modular_short_circuit(const SuiteOptions& o) {
  Reporter rep("modular-short-circuit");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& f : modular_flats(m)) {
      for (ElementSet c : m.circuits()) {
        if ((c & f.elements).is_empty()) continue;
        // the statement needs circuits crossing F: for C ⊆ F it reads
        // cl(∅) ∩ F and fails trivially in loopless matroids
        if (c.subset_of(f.elements)) continue;
        if ((m.closure(c - f.elements) & f.elements).is_empty()) {
          rep.fail(entry.name + ": cl(C-F) misses modular flat " +
                   m.label_set(f.elements) + " for circuit " +
                   m.label_set(c));
        }
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult modular_hyperplane_separation_extends(const SuiteOptions& o) {
  Reporter rep("modular-hyperplane-separation-extends");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& h : modular_hyperplanes(m)) {
      ElementSet cstar = m.elements() - h.elements;
      for_each_subset(cstar, [&](ElementSet xs) {
        if (!rep.ok()) return;
        ElementSet p = projection_union(m, h.elements, xs);
        for_each_subset(h.elements - p, [&](ElementSet extra) {
          if (!rep.ok()) return;
          ElementSet u = p | extra;
          if (m.closure(u) != (m.closure(u | xs) & h.elements)) {
            rep.fail(entry.name + ": cl(U) != cl(U ∪ X) ∩ H at U = " +
                     m.label_set(u) + ", X = " + m.label_set(xs));
          }
        });
      });
      if (!rep.ok()) break;
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult modular_hyperplane_restriction_connected(const SuiteOptions& o) {
  Reporter rep("modular-hyperplane-restriction-connected");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    if (!m.is_connected()) continue;
    for (const Flat& h : modular_hyperplanes(m)) {
      if (!m.restrict(h.elements).is_connected()) {
        rep.fail(entry.name + ": restriction to modular hyperplane " +
                 m.label_set(h.elements) + " is disconnected");
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult hyperplane_line_criterion_agreement(const SuiteOptions& o) {
  Reporter rep("hyperplane-line-criterion");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& h : m.hyperplanes()) {
      bool by_line = hyperplane_modular_by_line_criterion(m, h.elements);
      bool by_def = is_modular_flat(m, h.elements);
      if (by_line != by_def) {
        rep.fail(entry.name + ": criteria disagree on hyperplane " +
                 m.label_set(h.elements));
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

// ----------------------------------------------------- roundness lemmas

CheckResult rotunda_cover_containment(const SuiteOptions& o) {
  Reporter rep("rotunda-cover-containment");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    std::vector<Flat> rots = rotunda(m);
    std::vector<VerticalCover> covers = vertical_separations(m);
    for (std::size_t i = 0; i < rots.size() && rep.ok(); ++i) {
      for (std::size_t j = 0; j < rots.size() && rep.ok(); ++j) {
        if (i == j) continue;
        ElementSet r1 = rots[i].elements;
        ElementSet r2 = rots[j].elements;
        for (const VerticalCover& vc : covers) {
          for (auto [f1, f2] :
               {std::pair(vc.first.elements, vc.second.elements),
                std::pair(vc.second.elements, vc.first.elements)}) {
            if (!r1.subset_of(f1) || !r2.subset_of(f2)) continue;
            if ((f1 & f2) != (r1 & r2)) continue;
            if (r1.subset_of(f2) || r2.subset_of(f1)) {
              rep.fail(entry.name + ": rotunda " + m.label_set(r1) + ", " +
                       m.label_set(r2) + " violate cover containment");
            }
          }
        }
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult projections_are_round(const SuiteOptions& o) {
  Reporter rep("projections-are-round");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& h : modular_hyperplanes(m)) {
      ElementSet cstar = m.elements() - h.elements;
      for_each_subset(cstar, [&](ElementSet xs) {
        if (!rep.ok()) return;
        ElementSet p = projection_union(m, h.elements, xs);
        if (!is_round(m, p)) {
          rep.fail(entry.name + ": projection union " + m.label_set(p) +
                   " of X = " + m.label_set(xs) + " is not round");
        }
      });
      if (!rep.ok()) break;
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult vertical_cover_lifting(const SuiteOptions& o) {
  Reporter rep("vertical-cover-lifting");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& h : modular_hyperplanes(m)) {
      ElementSet cstar = m.elements() - h.elements;
      ElementSet p = projection_union(m, h.elements, cstar);
      Matroid view = m.restrict(h.elements);
      for (const VerticalCover& vc : vertical_separations(view)) {
        ElementSet f1 = vc.first.elements;
        ElementSet f2 = vc.second.elements;
        if (!p.subset_of(f1) && !p.subset_of(f2)) {
          rep.fail(entry.name + ": projections escape both sides of a " +
                   "vertical cover of M|H");
          break;
        }
        bool mc = is_modular_flat(view, f1) && is_modular_flat(view, f2);
        for (auto [inside, other] : {std::pair(f1, f2), std::pair(f2, f1)}) {
          if (!p.subset_of(inside)) continue;
          ElementSet lifted = inside | cstar;
          bool good = m.is_flat(lifted) && lifted != m.elements() &&
                      other != m.elements() &&
                      (lifted | other) == m.elements();
          if (!good) {
            rep.fail(entry.name + ": (F ∪ C*, F') is not a vertical cover");
          } else if (mc && (!is_modular_flat(m, lifted) ||
                            !is_modular_flat(m, other))) {
            rep.fail(entry.name + ": modular cover fails to lift");
          }
        }
        if (!rep.ok()) break;
      }
      if (!rep.ok()) break;
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult modular_cover_restriction(const SuiteOptions& o) {
  Reporter rep("modular-cover-restriction");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& h : modular_hyperplanes(m)) {
      Matroid view = m.restrict(h.elements);
      for (const ModularCover& mc : modular_covers(m)) {
        for (auto [f, fp] :
             {std::pair(mc.first.elements, mc.second.elements),
              std::pair(mc.second.elements, mc.first.elements)}) {
          if (!fp.subset_of(h.elements) || fp == h.elements) continue;
          ElementSet fh = f & h.elements;
          bool good = fh != h.elements && fp != h.elements &&
                      (fh | fp) == h.elements &&
                      is_modular_flat(view, fh) && is_modular_flat(view, fp);
          if (!good) {
            rep.fail(entry.name + ": (F∩H, F') fails to be a modular " +
                     "cover of M|H for H = " + m.label_set(h.elements));
          }
        }
        if (!rep.ok()) break;
      }
      if (!rep.ok()) break;
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult round_flats_inside_cocircuit_closure(const SuiteOptions& o) {
  Reporter rep("round-flats-inside-cocircuit-closure");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& h : modular_hyperplanes(m)) {
      ElementSet r = m.closure(m.elements() - h.elements);
      for (const Flat& f : round_flats(m)) {
        if (!f.elements.subset_of(h.elements) && !f.elements.subset_of(r)) {
          rep.fail(entry.name + ": round flat " + m.label_set(f.elements) +
                   " escapes both H and cl(C*)");
        }
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult cocircuit_closure_is_rotunda(const SuiteOptions& o) {
  Reporter rep("cocircuit-closure-is-rotunda");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& h : modular_hyperplanes(m)) {
      ElementSet r = m.closure(m.elements() - h.elements);
      std::vector<Flat> rots = rotunda(m);
      bool is_rot = false;
      for (const Flat& f : rots) {
        if (f.elements == r) is_rot = true;
      }
      if (!is_rot) {
        rep.fail(entry.name + ": cl(C*) = " + m.label_set(r) +
                 " is not a rotunda");
      }
      for (const Flat& f : rots) {
        if (f.elements != r && !f.elements.subset_of(h.elements)) {
          rep.fail(entry.name + ": rotunda " + m.label_set(f.elements) +
                   " is neither cl(C*) nor inside H");
        }
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult cocircuit_closure_meets_hyperplane_round(const SuiteOptions& o) {
  Reporter rep("cocircuit-closure-meets-hyperplane-round");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    for (const Flat& h : modular_hyperplanes(m)) {
      ElementSet r = m.closure(m.elements() - h.elements);
      if (!is_round(m, r & h.elements)) {
        rep.fail(entry.name + ": cl(C*) ∩ H is not round for H = " +
                 m.label_set(h.elements));
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult every_element_in_a_rotunda(const SuiteOptions& o) {
  Reporter rep("every-element-in-a-rotunda");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    ElementSet covered;
    for (const Flat& f : rotunda(m)) covered |= f.elements;
    if (covered != m.elements()) {
      rep.fail(entry.name + ": rotunda do not cover the ground set");
      break;
    }
  }
  return rep.finish();
}

// ------------------------------------------------------------------ venn

CheckResult venn_fixture_profiles(const SuiteOptions&) {
  Reporter rep("venn-fixture-profiles");
  struct Expected {
    Matroid matroid;
    bool supersolvable, saturated, c_chordal;
  };
  std::vector<Expected> table = {
      {u36(), false, true, false},      {w4(), false, false, true},
      {fano(), true, true, true},       {dual_k33(), false, true, true},
      {pabx(), true, false, true},
  };
  for (const Expected& expect : table) {
    ChordalityProfile profile = classify(expect.matroid);
    if (profile.supersolvable != expect.supersolvable ||
        profile.saturated != expect.saturated ||
        profile.c_chordal != expect.c_chordal) {
      std::ostringstream msg;
      msg << expect.matroid.name() << ": classify gave ("
          << profile.supersolvable << "," << profile.saturated << ","
          << profile.c_chordal << "), expected (" << expect.supersolvable
          << "," << expect.saturated << "," << expect.c_chordal << ")";
      rep.fail(msg.str());
    }
  }
  return rep.finish();
}

CheckResult saturated_restriction(const SuiteOptions& o) {
  Reporter rep("saturated-restriction");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    if (!is_saturated(m).first) continue;
    for (const Flat& f : m.flats()) {
      if (!is_saturated(m.restrict(f.elements)).first) {
        rep.fail(entry.name + ": restriction to flat " +
                 m.label_set(f.elements) + " is not saturated");
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult saturated_cover_from_hyperplane(const SuiteOptions& o) {
  Reporter rep("saturated-cover-from-hyperplane");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    if (!is_saturated(m).first) continue;
    for (const Flat& h : modular_hyperplanes(m)) {
      ElementSet cstar = m.elements() - h.elements;
      if (m.is_spanning(cstar)) continue;
      ElementSet r = m.closure(cstar);
      bool good = r != m.elements() &&
                  (h.elements | r) == m.elements() &&
                  is_modular_flat(m, h.elements) && is_modular_flat(m, r);
      if (!good) {
        rep.fail(entry.name + ": (H, cl(C*)) is not a modular cover");
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult direct_sum_classification(const SuiteOptions& o) {
  Reporter rep("direct-sum-classification");
  std::vector<CatalogEntry> small = entries_with_at_most(o, 4);
  std::vector<std::pair<Matroid, Matroid>> pairs;
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      if (small[i].matroid.size() + small[j].matroid.size() <=
          o.lemma_element_bound) {
        pairs.emplace_back(small[i].matroid, small[j].matroid);
      }
    }
  }
  pairs.emplace_back(u36(), Matroid::uniform(1, 1));
  pairs.emplace_back(w4(), Matroid::uniform(1, 2));
  for (auto& [a, b] : pairs) {
    Matroid sum = Matroid::direct_sum({a, b});
    bool ss_expect = is_supersolvable(a) && is_supersolvable(b);
    bool sat_expect = is_saturated(a).first && is_saturated(b).first;
    if (is_supersolvable(sum) != ss_expect) {
      rep.fail(a.name() + " (+) " + b.name() +
               ": supersolvability not componentwise");
    }
    if (is_saturated(sum).first != sat_expect) {
      rep.fail(a.name() + " (+) " + b.name() +
               ": saturation not componentwise");
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult strong_chords_imply_c_chordal(const SuiteOptions& o) {
  Reporter rep("strong-chords-and-venn-containment");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    bool ss_sat = is_supersolvable(m) && is_saturated(m).first;
    if (ss_sat) {
      if (!is_c_chordal(m).first) {
        rep.fail(entry.name +
                 ": supersolvable saturated but not C-chordal");
      }
      for (ElementSet c : m.circuits()) {
        if (c.count() < 4) continue;
        if (!strong_chord_witness(m, c)) {
          rep.fail(entry.name + ": no strong chord for circuit " +
                   m.label_set(c));
        }
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult rotunda_count_bound(const SuiteOptions& o) {
  Reporter rep("rotunda-count-bound");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    if (!is_supersolvable(m)) continue;
    if (static_cast<int>(rotunda(m).size()) > std::max(m.rank(), 1)) {
      // a rank-0 matroid has one rotunda; supersolvable matroids of
      // positive rank have at most r(M)
      rep.fail(entry.name + ": more than r(M) rotunda");
    }
  }
  return rep.finish();
}

// -------------------------------------------------------- correspondence

CheckResult graphic_round_flats_are_cliques(const SuiteOptions& o) {
  Reporter rep("graphic-round-flats-are-cliques");
  for (const SimpleGraph& g : connected_graphs_up_to(o.graph_max_n)) {
    Matroid m = graphic_matroid(g);
    std::vector<std::pair<int, int>> edges = g.edges();
    std::set<ElementSet> clique_edge_sets;
    for (VertexSet c : all_cliques(g)) {
      ElementSet f;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (c.contains(edges[e].first) && c.contains(edges[e].second)) {
          f = f.with(static_cast<int>(e));
        }
      }
      clique_edge_sets.insert(f);
    }
    std::set<ElementSet> round;
    for (const Flat& f : round_flats(m)) round.insert(f.elements);
    if (round != clique_edge_sets) {
      rep.fail("M(" + g.name() + "): round flats differ from clique edge sets");
      break;
    }
    // maximal cliques <-> rotunda
    std::set<ElementSet> rot;
    for (const Flat& f : rotunda(m)) rot.insert(f.elements);
    std::set<ElementSet> max_clique_sets;
    for (VertexSet c : maximal_cliques(g)) {
      ElementSet f;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (c.contains(edges[e].first) && c.contains(edges[e].second)) {
          f = f.with(static_cast<int>(e));
        }
      }
      max_clique_sets.insert(f);
    }
    if (rot != max_clique_sets) {
      rep.fail("M(" + g.name() +
               "): rotunda differ from maximal clique edge sets");
      break;
    }
  }
  return rep.finish();
}

CheckResult graphic_saturated_and_chordal_iff_supersolvable(
    const SuiteOptions& o) {
  Reporter rep("graphic-saturation-and-chordality");
  for (const SimpleGraph& g : connected_graphs_up_to(o.graph_max_n)) {
    Matroid m = graphic_matroid(g);
    if (!is_saturated(m).first) {
      rep.fail("M(" + g.name() + ") is not saturated");
      break;
    }
    if (is_chordal(g).chordal != is_supersolvable(m)) {
      rep.fail("M(" + g.name() +
               "): supersolvability disagrees with chordality");
      break;
    }
  }
  return rep.finish();
}

CheckResult rotunda_graph_matches_reduced_clique_graph(
    const SuiteOptions& o) {
  Reporter rep("rotunda-graph-equals-rcg-two-connected");
  for (const SimpleGraph& g : connected_graphs_up_to(o.graph_max_n)) {
    if (!g.is_two_connected() || !is_chordal(g).chordal) continue;
    RcgMatchResult match = check_rcg_equals_rotunda_graph(g);
    if (!match.equal) {
      rep.fail(g.name() + ": " + match.detail);
      break;
    }
  }
  return rep.finish();
}

CheckResult rotunda_graph_edges_within_reduced_clique_graph(
    const SuiteOptions& o) {
  Reporter rep("rotunda-graph-edges-within-rcg");
  for (const SimpleGraph& g : connected_graphs_up_to(o.graph_max_n)) {
    if (!is_chordal(g).chordal) continue;
    Matroid m = graphic_matroid(g);
    std::vector<std::pair<int, int>> edges = g.edges();
    ReducedCliqueGraph rcg = reduced_clique_graph(g);
    RotundaGraph rot = rotunda_graph(m);
    // identify cliques with their edge-set flats
    std::map<ElementSet, int> clique_of_flat;
    for (std::size_t i = 0; i < rcg.cliques.size(); ++i) {
      ElementSet f;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (rcg.cliques[i].contains(edges[e].first) &&
            rcg.cliques[i].contains(edges[e].second)) {
          f = f.with(static_cast<int>(e));
        }
      }
      clique_of_flat[f] = static_cast<int>(i);
    }
    std::set<std::pair<int, int>> rcg_edges;
    for (auto e : rcg.edge_list()) rcg_edges.insert(e);
    for (const auto& e : rot.edges) {
      auto ia = clique_of_flat.find(rot.nodes[e.a].elements);
      auto ib = clique_of_flat.find(rot.nodes[e.b].elements);
      if (ia == clique_of_flat.end() || ib == clique_of_flat.end()) {
        rep.fail(g.name() + ": rotunda is not a maximal clique flat");
        break;
      }
      std::pair<int, int> key{std::min(ia->second, ib->second),
                              std::max(ia->second, ib->second)};
      if (!rcg_edges.count(key)) {
        rep.fail(g.name() + ": R(M(G)) edge missing from C_R(G)");
        break;
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult two_connectivize_preserves_rcg(const SuiteOptions& o) {
  Reporter rep("two-connectivize-preserves-rcg");
  for (const SimpleGraph& g : connected_graphs_up_to(o.graph_max_n)) {
    if (!is_chordal(g).chordal) continue;
    SimpleGraph g2 = two_connectivize(g);
    ReducedCliqueGraph a = reduced_clique_graph(g);
    ReducedCliqueGraph b = reduced_clique_graph(g2);
    auto iso = graph_isomorphism(static_cast<int>(a.cliques.size()),
                                 a.edge_list(),
                                 static_cast<int>(b.cliques.size()),
                                 b.edge_list());
    if (!iso) {
      rep.fail(g.name() + ": C_R changes under 2-connectivization");
      break;
    }
  }
  return rep.finish();
}

CheckResult compliant_graph_construction(const SuiteOptions& o) {
  Reporter rep("compliant-graph-construction");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.compliance_element_bound)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0 || !m.is_connected()) continue;
    if (!is_supersolvable(m) || !is_saturated(m).first) continue;
    auto [g, theta] = compliant_graph(m);
    if (!g.is_two_connected() || !is_chordal(g).chordal) {
      rep.fail(entry.name + ": companion graph is not 2-connected chordal");
      break;
    }
    ComplianceReport report = check_compliance(m, g, theta);
    if (!report.compliant()) {
      rep.fail(entry.name + ": " + report.detail);
      break;
    }
  }
  return rep.finish();
}

CheckResult roundtrip_both_directions(const SuiteOptions& o) {
  Reporter rep("roundtrip-both-directions");
  for (const SimpleGraph& g : connected_graphs_up_to(
           std::min(o.graph_max_n, 5))) {
    if (!is_chordal(g).chordal) continue;
    RoundTrip trip = roundtrip_from_chordal_graph(g);
    if (!trip.isomorphic) {
      rep.fail(g.name() + ": " + trip.detail);
      break;
    }
  }
  if (rep.ok()) {
    // one disconnected chordal case: a triangle next to an edge
    SimpleGraph g = SimpleGraph::with_vertex_count(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.set_name("K3+K2");
    RoundTrip trip = roundtrip_from_chordal_graph(g);
    if (!trip.isomorphic) rep.fail("K3+K2: " + trip.detail);
  }
  if (rep.ok()) {
    for (const CatalogEntry& entry :
         entries_with_at_most(o, o.compliance_element_bound)) {
      const Matroid& m = entry.matroid;
      if (m.size() == 0 || !m.is_connected()) continue;
      if (!is_supersolvable(m) || !is_saturated(m).first) continue;
      RoundTrip trip = roundtrip_from_matroid(m);
      if (!trip.isomorphic) {
        rep.fail(entry.name + ": " + trip.detail);
        break;
      }
    }
  }
  return rep.finish();
}

CheckResult isomorphism_checker_agreement(const SuiteOptions&) {
  Reporter rep("isomorphism-checker-agreement");
  std::vector<SimpleGraph> graphs = connected_graphs_up_to(4);
  auto brute = [](const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    std::vector<int> perm(a.vertex_count());
    for (int i = 0; i < a.vertex_count(); ++i) perm[i] = i;
    do {
      bool ok = true;
      for (int u = 0; u < a.vertex_count() && ok; ++u) {
        for (int v = u + 1; v < a.vertex_count() && ok; ++v) {
          ok = (a.adjacent(u, v) == b.adjacent(perm[u], perm[v]));
        }
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  for (const SimpleGraph& a : graphs) {
    for (const SimpleGraph& b : graphs) {
      bool fast = graph_isomorphism(a.vertex_count(), a.edges(),
                                    b.vertex_count(), b.edges())
                      .has_value();
      if (fast != brute(a, b)) {
        rep.fail(a.name() + " vs " + b.name() + ": checkers disagree");
      }
    }
  }
  return rep.finish();
}

// ------------------------------------------------------------------ trees

CheckResult clique_trees_are_max_weight_spanning_trees(
    const SuiteOptions& o) {
  Reporter rep("clique-trees-max-weight");
  CliqueWeighting square = [](VertexSet x) {
    return x.count() * x.count();
  };
  for (const SimpleGraph& g : connected_graphs_up_to(o.graph_max_n)) {
    if (!is_chordal(g).chordal) continue;
    // clique_trees itself verifies subtree-trees == max-weight trees
    CliqueTreesResult with_card =
        clique_trees(g, clique_cardinality_weighting(), o.tree_enum_bound);
    CliqueTreesResult with_square =
        clique_trees(g, square, o.tree_enum_bound);
    if (!with_card.exhaustive) continue;
    if (with_card.trees.size() != with_square.trees.size()) {
      rep.fail(g.name() + ": clique-tree set depends on the weighting");
      break;
    }
    // every reduced-clique-graph edge in some clique tree, and the union
    // of all clique trees is exactly C_R(G)
    std::set<std::pair<int, int>> used;
    for (const Tree& t : with_card.trees) {
      for (auto e : t.edges) used.insert(e);
    }
    std::set<std::pair<int, int>> rcg_edges;
    for (auto e : with_card.rcg.edge_list()) rcg_edges.insert(e);
    if (used != rcg_edges) {
      rep.fail(g.name() + ": C_R(G) is not the union of its clique trees");
      break;
    }
  }
  return rep.finish();
}

CheckResult rotunda_trees_are_max_weight_spanning_trees(
    const SuiteOptions& o) {
  Reporter rep("rotunda-trees-max-weight");
  for (const CatalogEntry& entry : catalog(o.graph_max_n)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0 || m.size() > 16 || !m.is_connected()) continue;
    if (!is_supersolvable(m) || !is_saturated(m).first) continue;
    if (static_cast<int>(rotunda(m).size()) > o.tree_enum_bound) continue;
    // rotunda_trees itself asserts the max-weight characterisation
    RotundaTreesResult by_rank =
        rotunda_trees(m, LegitimateWeighting::rank(), o.tree_enum_bound);
    RotundaTreesResult by_card = rotunda_trees(
        m, LegitimateWeighting::cardinality(), o.tree_enum_bound);
    if (by_rank.trees.size() != by_card.trees.size()) {
      rep.fail(entry.name + ": rotunda-tree set depends on the weighting");
      break;
    }
    std::set<std::pair<int, int>> used;
    for (const Tree& t : by_rank.trees) {
      for (auto e : t.edges) used.insert(e);
    }
    std::set<std::pair<int, int>> rot_edges;
    for (auto e : by_rank.graph.edge_list()) rot_edges.insert(e);
    if (used != rot_edges) {
      rep.fail(entry.name + ": R(M) is not the union of its rotunda trees");
      break;
    }
  }
  return rep.finish();
}

CheckResult rotunda_graph_connected_iff_connected(const SuiteOptions& o) {
  Reporter rep("rotunda-graph-connected-iff-connected");
  for (const CatalogEntry& entry : catalog(o.graph_max_n)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0 || m.size() > 16) continue;
    if (!is_supersolvable(m) || !is_saturated(m).first) continue;
    RotundaGraph rg = rotunda_graph(m);
    bool graph_connected = graph_of_edges_connected(
        static_cast<int>(rg.nodes.size()), rg.edge_list());
    if (graph_connected != m.is_connected()) {
      rep.fail(entry.name + ": R(M) connectivity differs from M");
      break;
    }
  }
  return rep.finish();
}

CheckResult rotunda_graph_of_direct_sum(const SuiteOptions& o) {
  Reporter rep("rotunda-graph-of-direct-sum");
  std::vector<Matroid> parts;
  for (const CatalogEntry& entry : entries_with_at_most(o, 5)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0) continue;
    if (is_supersolvable(m) && is_saturated(m).first) parts.push_back(m);
    if (parts.size() >= 6) break;
  }
  for (std::size_t i = 0; i < parts.size() && rep.ok(); ++i) {
    for (std::size_t j = i; j < parts.size() && rep.ok(); ++j) {
      if (parts[i].size() + parts[j].size() > 10) continue;
      Matroid sum = Matroid::direct_sum({parts[i], parts[j]});
      RotundaGraph whole = rotunda_graph(sum);
      RotundaGraph left = rotunda_graph(parts[i]);
      RotundaGraph right = rotunda_graph(parts[j]);
      int offset = parts[i].ground_size();
      std::set<ElementSet> expected_nodes;
      for (const Flat& f : left.nodes) expected_nodes.insert(f.elements);
      for (const Flat& f : right.nodes) {
        expected_nodes.insert(ElementSet(f.elements.bits() << offset));
      }
      std::set<ElementSet> got_nodes;
      for (const Flat& f : whole.nodes) got_nodes.insert(f.elements);
      if (expected_nodes != got_nodes) {
        rep.fail(parts[i].name() + " (+) " + parts[j].name() +
                 ": rotunda set is not the disjoint union");
        continue;
      }
      std::set<std::pair<ElementSet, ElementSet>> expected_edges;
      for (const auto& e : left.edges) {
        expected_edges.insert({left.nodes[e.a].elements,
                               left.nodes[e.b].elements});
      }
      for (const auto& e : right.edges) {
        expected_edges.insert(
            {ElementSet(right.nodes[e.a].elements.bits() << offset),
             ElementSet(right.nodes[e.b].elements.bits() << offset)});
      }
      std::set<std::pair<ElementSet, ElementSet>> got_edges;
      for (const auto& e : whole.edges) {
        ElementSet a = whole.nodes[e.a].elements;
        ElementSet b = whole.nodes[e.b].elements;
        got_edges.insert({std::min(a, b), std::max(a, b)});
      }
      std::set<std::pair<ElementSet, ElementSet>> expected_sorted;
      for (auto [a, b] : expected_edges) {
        expected_sorted.insert({std::min(a, b), std::max(a, b)});
      }
      if (expected_sorted != got_edges) {
        rep.fail(parts[i].name() + " (+) " + parts[j].name() +
                 ": rotunda-graph edges are not the disjoint union");
      }
    }
  }
  return rep.finish();
}

CheckResult rotunda_graph_restriction_step(const SuiteOptions& o) {
  Reporter rep("rotunda-graph-restriction-step");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0) continue;
    if (!is_supersolvable(m) || !is_saturated(m).first) continue;
    for (const Flat& h : modular_hyperplanes(m)) {
      Matroid view = m.restrict(h.elements);
      if (!is_supersolvable(view)) continue;
      ElementSet r = m.closure(m.elements() - h.elements);
      RotundaGraph big = rotunda_graph(m);
      RotundaGraph small = rotunda_graph(view);
      std::set<ElementSet> big_nodes, small_nodes;
      for (const Flat& f : big.nodes) big_nodes.insert(f.elements);
      for (const Flat& f : small.nodes) small_nodes.insert(f.elements);

      ElementSet r_cap_h = r & h.elements;
      bool case_a = small_nodes.count(r_cap_h) > 0;
      std::set<ElementSet> expected_big = small_nodes;
      if (case_a) expected_big.erase(r_cap_h);
      expected_big.insert(r);
      if (expected_big != big_nodes) {
        rep.fail(entry.name + ": rotunda sets break the hyperplane " +
                 "recursion at H = " + m.label_set(h.elements));
        break;
      }
      // edge correspondence: relabel R as R ∩ H (case a) or drop R (case b)
      auto relabel = [&](ElementSet node) {
        return node == r ? r_cap_h : node;
      };
      std::set<std::pair<ElementSet, ElementSet>> mapped;
      for (const auto& e : big.edges) {
        ElementSet a = relabel(big.nodes[e.a].elements);
        ElementSet b = relabel(big.nodes[e.b].elements);
        if (!case_a && (big.nodes[e.a].elements == r ||
                        big.nodes[e.b].elements == r)) {
          continue;  // case (b) deletes R and its edges
        }
        mapped.insert({std::min(a, b), std::max(a, b)});
      }
      std::set<std::pair<ElementSet, ElementSet>> small_edges;
      for (const auto& e : small.edges) {
        ElementSet a = small.nodes[e.a].elements;
        ElementSet b = small.nodes[e.b].elements;
        small_edges.insert({std::min(a, b), std::max(a, b)});
      }
      if (mapped != small_edges) {
        rep.fail(entry.name + ": rotunda-graph edges break the " +
                 "hyperplane recursion at H = " + m.label_set(h.elements));
        break;
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

// -------------------------------------------------------------- treewidth

CheckResult round_treewidth_equals_rank(const SuiteOptions& o) {
  Reporter rep("round-treewidth-equals-rank");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.treewidth_element_bound)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0) continue;
    if (!is_round(m, m.elements())) continue;
    int tw = brute_force_treewidth(m);
    if (tw != m.rank()) {
      rep.fail(entry.name + ": tw = " + std::to_string(tw) +
               " but r(M) = " + std::to_string(m.rank()));
    }
  }
  return rep.finish();
}

CheckResult rotunda_tree_width_optimal(const SuiteOptions& o) {
  Reporter rep("rotunda-tree-width-optimal");
  for (const CatalogEntry& entry : entries_with_at_most(o, 12)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0 || !m.is_connected()) continue;
    if (!is_supersolvable(m) || !is_saturated(m).first) continue;
    int by_rotunda = rotunda_treewidth(m);
    RotundaTreesResult trees = rotunda_trees(m);
    for (const Tree& t : trees.trees) {
      TreeDecomposition td = decomposition_from_rotunda_tree(trees.graph, t);
      WidthReport report = width(m, td);
      if (report.width != by_rotunda) {
        rep.fail(entry.name + ": a rotunda tree has width " +
                 std::to_string(report.width));
      }
      for (int node = 0; node < t.nodes; ++node) {
        if (report.node_widths[node] != trees.graph.nodes[node].rank) {
          rep.fail(entry.name + ": node width differs from the bag rank");
        }
      }
    }
    if (m.size() <= o.treewidth_element_bound) {
      int tw = brute_force_treewidth(m);
      if (tw != by_rotunda) {
        rep.fail(entry.name + ": brute-force tw " + std::to_string(tw) +
                 " != max rotunda rank " + std::to_string(by_rotunda));
      }
    } else {
      if (round_flat_lower_bound(m) > by_rotunda) {
        rep.fail(entry.name + ": round-flat bound exceeds the rotunda width");
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult round_flat_bound_below_brute_force(const SuiteOptions& o) {
  Reporter rep("round-flat-bound-below-brute-force");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.treewidth_element_bound)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0) continue;
    if (round_flat_lower_bound(m) > brute_force_treewidth(m)) {
      rep.fail(entry.name + ": round-flat bound exceeds the exact tree-width");
    }
  }
  return rep.finish();
}

CheckResult tree_edge_modular_cover(const SuiteOptions& o) {
  Reporter rep("tree-edge-modular-cover");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.lemma_element_bound)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0 || !m.is_connected()) continue;
    if (!is_supersolvable(m) || !is_saturated(m).first) continue;
    if (static_cast<int>(rotunda(m).size()) > o.tree_enum_bound) continue;
    RotundaTreesResult trees = rotunda_trees(m);
    for (const Tree& t : trees.trees) {
      for (std::size_t e = 0; e < t.edges.size(); ++e) {
        try {
          ModularCover cover = modular_cover_of_tree_edge(
              m, trees.graph, t, static_cast<int>(e));
          auto [u, v] = t.edges[e];
          ElementSet expect = trees.graph.nodes[u].elements &
                              trees.graph.nodes[v].elements;
          if ((cover.first.elements & cover.second.elements) != expect) {
            rep.fail(entry.name + ": cover intersection mismatch");
          }
        } catch (const Error& err) {
          rep.fail(entry.name + ": " + err.what());
        }
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult duplication_never_decreases_width(const SuiteOptions& o) {
  Reporter rep("duplication-never-decreases-width");
  std::mt19937 rng(20260810);
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.treewidth_element_bound)) {
    const Matroid& m = entry.matroid;
    int n = m.size();
    if (n < 2) continue;
    std::vector<int> elements = m.elements().to_vector();
    for (int trial = 0; trial < 20 && rep.ok(); ++trial) {
      int k = 2 + static_cast<int>(rng() % 3);
      std::vector<Tree> trees = all_labeled_trees(k);
      Tree tree = trees[rng() % trees.size()];
      TreeDecomposition strict;
      strict.tree = tree;
      strict.bags.assign(k, ElementSet());
      for (int e : elements) {
        int node = static_cast<int>(rng() % k);
        strict.bags[node] = strict.bags[node].with(e);
      }
      WidthReport before = width(m, strict);
      // duplicate a few elements into extra bags; per-node widths may
      // only grow
      TreeDecomposition duplicated = strict;
      for (int extra = 0; extra < 3; ++extra) {
        int e = elements[rng() % elements.size()];
        int node = static_cast<int>(rng() % k);
        duplicated.bags[node] = duplicated.bags[node].with(e);
      }
      WidthReport after = width(m, duplicated);
      for (int node = 0; node < k; ++node) {
        if (after.node_widths[node] < before.node_widths[node]) {
          rep.fail(entry.name + ": duplicating elements lowered a node width");
        }
      }
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

CheckResult empty_bags_never_help(const SuiteOptions& o) {
  Reporter rep("empty-bags-never-help");
  for (const CatalogEntry& entry :
       entries_with_at_most(o, o.treewidth_element_bound)) {
    const Matroid& m = entry.matroid;
    if (m.size() == 0) continue;
    int tw = brute_force_treewidth(m);
    // single bag holding everything, then grow empty leaves and
    // subdivisions: the width must never drop below the oracle value
    TreeDecomposition td;
    td.tree = Tree::single_node();
    td.bags = {m.elements()};
    for (int step = 0; step < 4; ++step) {
      WidthReport report = width(m, td);
      if (report.width < tw) {
        rep.fail(entry.name + ": empty bags dropped the width below tw");
        break;
      }
      // attach an empty leaf to the last node, then subdivide the new edge
      int attach = td.tree.nodes - 1;
      td.tree.edges.emplace_back(attach, td.tree.nodes);
      td.tree.nodes += 1;
      td.bags.push_back(ElementSet());
      std::sort(td.tree.edges.begin(), td.tree.edges.end());
    }
    if (!rep.ok()) break;
  }
  return rep.finish();
}

}  // namespace checks

std::vector<std::string> suite_names() {
  return {"axioms",         "modularity-lemmas", "roundness-lemmas",
          "venn",           "correspondence",    "trees",
          "treewidth"};
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& options) {
  using CheckFn = CheckResult (*)(const SuiteOptions&);
  static const std::map<std::string, std::vector<CheckFn>> table = {
      {"axioms",
       {checks::rank_axioms, checks::closure_axioms, checks::circuit_ranks,
        checks::direct_sum_rank_additivity,
        checks::dual_k33_circuits_are_bonds,
        checks::connected_components_agree_with_circuits}},
      {"modularity-lemmas",
       {checks::modular_intersection_and_restriction,
        checks::modular_short_circuit,
        checks::modular_hyperplane_separation_extends,
        checks::modular_hyperplane_restriction_connected,
        checks::hyperplane_line_criterion_agreement}},
      {"roundness-lemmas",
       {checks::rotunda_cover_containment, checks::projections_are_round,
        checks::vertical_cover_lifting, checks::modular_cover_restriction,
        checks::round_flats_inside_cocircuit_closure,
        checks::cocircuit_closure_is_rotunda,
        checks::cocircuit_closure_meets_hyperplane_round,
        checks::every_element_in_a_rotunda}},
      {"venn",
       {checks::venn_fixture_profiles, checks::saturated_restriction,
        checks::saturated_cover_from_hyperplane,
        checks::direct_sum_classification,
        checks::strong_chords_imply_c_chordal,
        checks::rotunda_count_bound}},
      {"correspondence",
       {checks::graphic_round_flats_are_cliques,
        checks::graphic_saturated_and_chordal_iff_supersolvable,
        checks::rotunda_graph_matches_reduced_clique_graph,
        checks::rotunda_graph_edges_within_reduced_clique_graph,
        checks::two_connectivize_preserves_rcg,
        checks::compliant_graph_construction,
        checks::roundtrip_both_directions,
        checks::isomorphism_checker_agreement}},
      {"trees",
       {checks::clique_trees_are_max_weight_spanning_trees,
        checks::rotunda_trees_are_max_weight_spanning_trees,
        checks::rotunda_graph_connected_iff_connected,
        checks::rotunda_graph_of_direct_sum,
        checks::rotunda_graph_restriction_step}},
      {"treewidth",
       {checks::round_treewidth_equals_rank,
        checks::rotunda_tree_width_optimal,
        checks::round_flat_bound_below_brute_force,
        checks::tree_edge_modular_cover,
        checks::duplication_never_decreases_width,
        checks::empty_bags_never_help}},
  };
  auto it = table.find(suite);
  if (it == table.end()) {
    throw InputError("unknown suite: " + suite + " (known: axioms, " +
                     "modularity-lemmas, roundness-lemmas, venn, " +
                     "correspondence, trees, treewidth)");
  }
  const std::vector<CheckFn>& fns = it->second;
  std::vector<CheckResult> results(fns.size());
  detail::parallel_for_index(
      static_cast<int>(fns.size()), options.jobs,
      [&](int i) { results[i] = fns[i](options); });
  return results;
}

}  // namespace rotunda
