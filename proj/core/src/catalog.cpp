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

#include "rotunda/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "rotunda/correspondence.hpp"
#include "rotunda/errors.hpp"

namespace rotunda {

Matroid u36() {
  return Matroid::uniform(3, 6, {"a", "b", "c", "d", "e", "f"})
      .named("U(3,6)");
}

Matroid fano() {
  // columns 1..7 = all non-zero vectors of GF(2)^3
  std::vector<std::vector<int>> rows(3, std::vector<int>(7));
  std::vector<std::string> labels;
  for (int c = 1; c <= 7; ++c) {
    labels.push_back(std::to_string(c));
    for (int r = 0; r < 3; ++r) rows[r][c - 1] = (c >> (2 - r)) & 1;
  }
  return Matroid::linear(2, rows, labels).named("F7");
}

Matroid rank3_from_lines(int size, const std::vector<ElementSet>& lines,
                         std::vector<std::string> labels) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].count() < 3) {
      throw InputError("rank3_from_lines: a long line needs >= 3 points");
    }
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if ((lines[i] & lines[j]).count() > 1) {
        throw InputError(
            "rank3_from_lines: two lines share more than one point");
      }
    }
  }
  std::vector<ElementSet> circuits;
  for (ElementSet line : lines) {
    for_each_subset(line, [&](ElementSet s) {
      if (s.count() == 3) circuits.push_back(s);
    });
  }
  // line-free 4-subsets complete the circuit list of a rank-3 matroid
  ElementSet ground = ElementSet::full(size);
  for_each_subset(ground, [&](ElementSet s) {
    if (s.count() != 4) return;
    for (ElementSet c : circuits) {
      if (c.count() == 3 && c.subset_of(s)) return;
    }
    circuits.push_back(s);
  });
  return Matroid::from_circuits(size, circuits, std::move(labels));
}

Matroid w4() {
  // a,b,c,d,e,f = 0..5
  return rank3_from_lines(6, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}},
                          {"a", "b", "c", "d", "e", "f"})
      .named("W4");
}

Matroid pabx() {
  // p,a,b,c,d,e,f,x = 0..7
  return rank3_from_lines(
             8,
             {{0, 1, 2, 3}, {0, 4, 5, 6}, {1, 4, 7}, {2, 5, 7}, {3, 6, 7}},
             {"p", "a", "b", "c", "d", "e", "f", "x"})
      .named("PABX");
}

Matroid dual_k33() {
  // K_{3,3} on vertices 1,2,3 (left) and 4,5,6 (right); elements are its
  // nine edges. Circuits of the dual are the minimal edge cuts: the cut
  // d(S) is minimal exactly when both S and its complement induce
  // connected subgraphs.
  const int kVerts = 6;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (int l = 0; l < 3; ++l) {
    for (int r = 3; r < 6; ++r) {
      edges.emplace_back(l, r);
      labels.push_back(std::to_string(l + 1) + "-" + std::to_string(r + 1));
    }
  }
  auto adjacent = [&](int u, int v) {
    return (u < 3) != (v < 3);
  };
  auto connected_set = [&](ElementSet s) {
    if (s.is_empty()) return false;
    ElementSet reached = ElementSet::single(s.lowest());
    while (true) {
      ElementSet next = reached;
      for (int u : reached) {
        for (int v : s) {
          if (adjacent(u, v)) next = next.with(v);
        }
      }
      if (next == reached) break;
      reached = next;
    }
    return reached == s;
  };
  std::vector<ElementSet> bonds;
  ElementSet all = ElementSet::full(kVerts);
  for_each_subset(all, [&](ElementSet s) {
    if (s.is_empty() || s == all) return;
    if (!s.contains(0)) return;  // one side per bond
    ElementSet t = all - s;
    if (!connected_set(s) || !connected_set(t)) return;
    ElementSet cut;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      bool u_in = s.contains(edges[e].first);
      bool v_in = s.contains(edges[e].second);
      if (u_in != v_in) cut = cut.with(static_cast<int>(e));
    }
    bonds.push_back(cut);
  });
  return Matroid::from_circuits(9, bonds, labels).named("M*(K3,3)");
}

namespace {

int pair_index(int i, int j, int n) {
  // index of (i,j), i<j, in lexicographic pair order
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += n - a - 1;
  return idx + (j - i - 1);
}

bool mask_connected(std::uint64_t mask, int n,
                    const std::vector<std::pair<int, int>>& pairs) {
  if (n <= 1) return true;
  std::vector<std::uint64_t> adj(n, 0);
  std::uint64_t bits = mask;
  while (bits) {
    int e = std::countr_zero(bits);
    bits &= bits - 1;
    adj[pairs[e].first] |= (std::uint64_t{1} << pairs[e].second);
    adj[pairs[e].second] |= (std::uint64_t{1} << pairs[e].first);
  }
  std::uint64_t reached = 1, frontier = 1;
  std::uint64_t everyone = (std::uint64_t{1} << n) - 1;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == everyone;
}

std::vector<SimpleGraph> enumerate_connected_graphs(int n) {
  std::vector<SimpleGraph> out;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  int m = static_cast<int>(pairs.size());

  // pair-index remap table per permutation
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> remaps;
  do {
    std::vector<int> remap(m);
    for (int e = 0; e < m; ++e) {
      int a = perm[pairs[e].first];
      int b = perm[pairs[e].second];
      remap[e] = pair_index(std::min(a, b), std::max(a, b), n);
    }
    remaps.push_back(std::move(remap));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!mask_connected(mask, n, pairs)) continue;
    bool canonical = true;
    for (const auto& remap : remaps) {
      std::uint64_t mapped = 0;
      std::uint64_t bits = mask;
      while (bits) {
        int e = std::countr_zero(bits);
        bits &= bits - 1;
        mapped |= (std::uint64_t{1} << remap[e]);
      }
      if (mapped < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    SimpleGraph g = SimpleGraph::with_vertex_count(n);
    std::uint64_t bits = mask;
    while (bits) {
      int e = std::countr_zero(bits);
      bits &= bits - 1;
      g.add_edge(pairs[e].first, pairs[e].second);
    }
    out.push_back(std::move(g));
  }

  // deterministic names; complete graphs get the usual one
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].edge_count() == m && n >= 1) {
      out[i].set_name("K" + std::to_string(n));
    } else {
      out[i].set_name("G" + std::to_string(n) + "." + std::to_string(i));
    }
  }
  return out;
}

}  // namespace

const std::vector<SimpleGraph>& connected_graphs(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<SimpleGraph>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) {
    it = memo.emplace(n, enumerate_connected_graphs(n)).first;
  }
  return it->second;
}

std::vector<SimpleGraph> connected_graphs_up_to(int max_n) {
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto& level = connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<CatalogEntry> catalog(int graph_max_n) {
  if (graph_max_n > 16) {
    throw BoundError("catalog: graph_max_n exceeds 16");
  }
  // memoised so repeated runs share the per-matroid caches
  static std::mutex mu;
  static std::map<int, std::vector<CatalogEntry>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(graph_max_n);
  if (it != memo.end()) return it->second;

  std::vector<CatalogEntry> out;
  out.push_back({"U(3,6)", u36()});
  out.push_back({"F7", fano()});
  out.push_back({"W4", w4()});
  out.push_back({"M*(K3,3)", dual_k33()});
  out.push_back({"PABX", pabx()});
  for (const SimpleGraph& g : connected_graphs_up_to(graph_max_n)) {
    std::string name = "M(" + g.name() + ")";
    out.push_back({name, graphic_matroid(g).named(name)});
  }
  memo[graph_max_n] = out;
  return out;
}

}  // namespace rotunda
