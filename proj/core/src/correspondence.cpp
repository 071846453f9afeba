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

#include "rotunda/correspondence.hpp"

#include <algorithm>
#include <map>

#include "rotunda/classification.hpp"
#include "rotunda/roundness.hpp"

namespace rotunda {

Matroid graphic_matroid(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> edges = g.edges();  // sorted (u,v)
  std::vector<std::string> vertex_labels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertex_labels.push_back(g.vertex_label(v));
  }
  Matroid m = Matroid::graphic(g.vertex_count(), edges, {}, vertex_labels);
  if (!g.name().empty()) m = m.named("M(" + g.name() + ")");
  return m;
}

SimpleGraph two_connectivize(const SimpleGraph& g) {
  if (!g.is_connected()) {
    throw HypothesisError("two_connectivize: graph is disconnected");
  }
  bool chordal_before = is_chordal(g).chordal;
  SimpleGraph out = g;
  // clones are inserted one at a time and joined to the cut-vertex and all
  // of its current neighbours, so each clone is a true twin: clones of
  // adjacent cut-vertices end up adjacent as well (the clique
  // correspondence needs this when two cut-vertices are adjacent)
  for (int cut : g.cut_vertices()) {
    std::string label = g.vertex_label(cut) + "'";
    while (out.vertex_by_label(label) >= 0) label += "'";
    int clone = out.add_vertex(label);
    out.add_edge(clone, cut);
    for (int nb : out.neighbors(cut)) {
      if (nb != clone) out.add_edge(clone, nb);
    }
  }
  if (!out.is_two_connected()) {
    throw Error("two_connectivize: result is not 2-connected");
  }
  if (chordal_before && !is_chordal(out).chordal) {
    throw Error("two_connectivize: chordality was not preserved");
  }
  if (!g.name().empty()) out.set_name(g.name() + "'");
  return out;
}

namespace {

/// Edge set (as matroid elements) induced by a vertex set, using the same
/// sorted edge order as graphic_matroid.
ElementSet edge_set_of(const std::vector<std::pair<int, int>>& edges,
                       VertexSet vertices) {
  ElementSet out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (vertices.contains(edges[e].first) &&
        vertices.contains(edges[e].second)) {
      out = out.with(static_cast<int>(e));
    }
  }
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet vertices) {
  std::vector<std::string> labels;
  std::vector<int> old_ids;
  for (int v : vertices) {
    labels.push_back(g.vertex_label(v));
    old_ids.push_back(v);
  }
  SimpleGraph out(labels);
  for (std::size_t a = 0; a < old_ids.size(); ++a) {
    for (std::size_t b = a + 1; b < old_ids.size(); ++b) {
      if (g.adjacent(old_ids[a], old_ids[b])) {
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return out;
}

}  // namespace

RcgMatchResult check_rcg_equals_rotunda_graph(const SimpleGraph& g) {
  if (!g.is_two_connected()) {
    throw HypothesisError(
        "check_rcg_equals_rotunda_graph: graph is not 2-connected");
  }
  auto cert = is_chordal(g);
  if (!cert.chordal) {
    throw HypothesisError(
        "check_rcg_equals_rotunda_graph: graph is not chordal");
  }

  RcgMatchResult result;
  Matroid m = graphic_matroid(g);
  std::vector<std::pair<int, int>> edges = g.edges();
  ReducedCliqueGraph rcg = reduced_clique_graph(g);
  RotundaGraph rot = rotunda_graph(m);

  if (rcg.cliques.size() != rot.nodes.size()) {
    result.detail = "clique count " + std::to_string(rcg.cliques.size()) +
                    " != rotunda count " + std::to_string(rot.nodes.size());
    return result;
  }
  std::map<ElementSet, int> rotunda_index;
  for (std::size_t i = 0; i < rot.nodes.size(); ++i) {
    rotunda_index[rot.nodes[i].elements] = static_cast<int>(i);
  }
  result.clique_to_rotunda.assign(rcg.cliques.size(), -1);
  for (std::size_t i = 0; i < rcg.cliques.size(); ++i) {
    ElementSet flat = edge_set_of(edges, rcg.cliques[i]);
    auto it = rotunda_index.find(flat);
    if (it == rotunda_index.end()) {
      result.detail = "clique " + g.label_set(rcg.cliques[i]) +
                      " has no matching rotunda";
      return result;
    }
    result.clique_to_rotunda[i] = it->second;
  }

  std::vector<std::pair<int, int>> mapped;
  for (auto [a, b] : rcg.edge_list()) {
    int ra = result.clique_to_rotunda[a];
    int rb = result.clique_to_rotunda[b];
    mapped.emplace_back(std::min(ra, rb), std::max(ra, rb));
  }
  std::sort(mapped.begin(), mapped.end());
  std::vector<std::pair<int, int>> rot_edges = rot.edge_list();
  std::sort(rot_edges.begin(), rot_edges.end());
  if (mapped != rot_edges) {
    result.detail = "edge sets differ under the clique-flat identification";
    return result;
  }
  result.equal = true;
  return result;
}

VertexSet ComplianceMap::image(ElementSet elements) const {
  VertexSet out;
  for (int e : elements) {
    out = out.with(theta[e][0]).with(theta[e][1]);
  }
  return out;
}

ElementSet ComplianceMap::preimage(VertexSet vertices,
                                   ElementSet domain) const {
  ElementSet out;
  for (int e : domain) {
    if (vertices.contains(theta[e][0]) && vertices.contains(theta[e][1])) {
      out = out.with(e);
    }
  }
  return out;
}

std::pair<SimpleGraph, ComplianceMap> compliant_graph(const Matroid& m) {
  if (m.size() == 0) {
    throw HypothesisError("compliant_graph: empty matroid");
  }
  if (!m.is_connected()) {
    throw HypothesisError("compliant_graph: matroid is disconnected");
  }
  auto chain_opt = supersolvable_chain(m);
  if (!chain_opt) {
    throw HypothesisError("compliant_graph: matroid is not supersolvable");
  }
  if (!is_saturated(m).first) {
    throw HypothesisError("compliant_graph: matroid is not saturated");
  }
  const std::vector<Flat>& chain = chain_opt->flats;
  int r = m.rank();

  SimpleGraph g;
  ComplianceMap map;
  map.theta.assign(m.ground_size(), {-1, -1});

  // Base level: the rank <= 1 restriction becomes a complete graph on two
  // vertices per element, elements processed in ascending order.
  int base = std::min(1, r);
  ElementSet base_set = chain[base].elements;
  for (int e : base_set) {
    int v0 = g.add_vertex(m.label(e) + ".0");
    int v1 = g.add_vertex(m.label(e) + ".1");
    map.theta[e] = {v0, v1};
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) g.add_edge(u, v);
  }

  // Each chain step adds Y (two new vertices per cocircuit element) joined
  // to the clique of R ∩ H and to each other.
  for (int i = base + 1; i <= r; ++i) {
    ElementSet level = chain[i].elements;
    ElementSet hyper = chain[i - 1].elements;
    ElementSet cstar = level - hyper;
    Matroid view = m.restrict(level);
    ElementSet r_flat = view.closure(cstar);
    ElementSet r_cap_h = r_flat & hyper;
    if (r_cap_h.is_empty()) {
      throw Error(
          "compliant_graph: R ∩ H is empty on a connected input; this "
          "indicates a bug");
    }
    VertexSet w = map.image(r_cap_h);
    std::vector<int> fresh;
    for (int c : cstar) {
      int v0 = g.add_vertex(m.label(c) + ".0");
      int v1 = g.add_vertex(m.label(c) + ".1");
      map.theta[c] = {v0, v1};
      fresh.push_back(v0);
      fresh.push_back(v1);
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        g.add_edge(fresh[a], fresh[b]);
      }
    }
    for (int y : fresh) {
      for (int wv : w) g.add_edge(y, wv);
    }
  }
  return {std::move(g), std::move(map)};
}

ComplianceReport check_compliance(const Matroid& m, const SimpleGraph& g,
                                  const ComplianceMap& theta) {
  ComplianceReport report;
  ElementSet domain = m.elements();

  // (i) every element maps onto exactly two distinct vertices
  report.pairs_have_size_two = true;
  for (int e : domain) {
    auto [v0, v1] = std::pair(theta.theta[e][0], theta.theta[e][1]);
    if (v0 < 0 || v1 < 0 || v0 == v1 || v0 >= g.vertex_count() ||
        v1 >= g.vertex_count()) {
      report.pairs_have_size_two = false;
      report.detail = "condition (i) fails at element " + m.label(e);
      return report;
    }
  }

  // (ii) every vertex covered exactly once
  std::vector<int> cover(g.vertex_count(), 0);
  for (int e : domain) {
    cover[theta.theta[e][0]]++;
    cover[theta.theta[e][1]]++;
  }
  report.vertices_covered_once = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (cover[v] != 1) {
      report.vertices_covered_once = false;
      report.detail =
          "condition (ii) fails at vertex " + g.vertex_label(v);
      return report;
    }
  }

  // (iii) round flats map onto cliques
  report.round_flats_are_cliques = true;
  for (const Flat& f : round_flats(m)) {
    if (f.elements.is_empty()) continue;
    if (!g.is_clique(theta.image(f.elements))) {
      report.round_flats_are_cliques = false;
      report.detail = "condition (iii) fails for round flat " +
                      m.label_set(f.elements);
      return report;
    }
  }

  // (iv) modular flats extend across unions of components of G - theta(F)
  if (m.size() > 12) {
    throw BoundError(
        "check_compliance: condition (iv) is limited to 12 elements");
  }
  report.modular_flats_extend = true;
  for (const Flat& f : modular_flats(m)) {
    VertexSet removed = theta.image(f.elements);
    std::vector<VertexSet> components;
    VertexSet todo = g.vertices() - removed;
    while (!todo.is_empty()) {
      VertexSet comp =
          g.reachable(VertexSet::single(todo.lowest()), removed);
      components.push_back(comp);
      todo = todo - comp;
    }
    if (components.size() > 20) {
      throw BoundError("check_compliance: too many components in (iv)");
    }
    std::uint64_t unions = std::uint64_t{1} << components.size();
    for (std::uint64_t pick = 0; pick < unions; ++pick) {
      VertexSet u;
      for (std::size_t c = 0; c < components.size(); ++c) {
        if ((pick >> c) & 1) u = u | components[c];
      }
      ElementSet d = f.elements | theta.preimage(u, domain);
      if (!m.is_flat(d) || !is_modular_flat(m, d)) {
        report.modular_flats_extend = false;
        report.detail = "condition (iv) fails for modular flat " +
                        m.label_set(f.elements) + " and union " +
                        g.label_set(u);
        return report;
      }
    }
  }

  // (v) theta restricted to the rotunda is an isomorphism onto C_R(G)
  report.rotunda_clique_isomorphism = true;
  RotundaGraph rot = rotunda_graph(m);
  ReducedCliqueGraph rcg = reduced_clique_graph(g);
  if (rot.nodes.size() != rcg.cliques.size()) {
    report.rotunda_clique_isomorphism = false;
    report.detail = "condition (v): rotunda and maximal clique counts differ";
    return report;
  }
  std::map<VertexSet, int> clique_index;
  for (std::size_t i = 0; i < rcg.cliques.size(); ++i) {
    clique_index[rcg.cliques[i]] = static_cast<int>(i);
  }
  std::vector<int> to_clique(rot.nodes.size(), -1);
  for (std::size_t i = 0; i < rot.nodes.size(); ++i) {
    auto it = clique_index.find(theta.image(rot.nodes[i].elements));
    if (it == clique_index.end()) {
      report.rotunda_clique_isomorphism = false;
      report.detail = "condition (v): theta image of rotunda " +
                      m.label_set(rot.nodes[i].elements) +
                      " is not a maximal clique";
      return report;
    }
    to_clique[i] = it->second;
  }
  std::vector<int> seen(rcg.cliques.size(), 0);
  for (int c : to_clique) seen[c]++;
  for (int count : seen) {
    if (count != 1) {
      report.rotunda_clique_isomorphism = false;
      report.detail = "condition (v): theta is not a bijection";
      return report;
    }
  }
  std::vector<std::pair<int, int>> mapped;
  for (const auto& e : rot.edges) {
    int a = to_clique[e.a];
    int b = to_clique[e.b];
    mapped.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(mapped.begin(), mapped.end());
  std::vector<std::pair<int, int>> rcg_edges = rcg.edge_list();
  std::sort(rcg_edges.begin(), rcg_edges.end());
  if (mapped != rcg_edges) {
    report.rotunda_clique_isomorphism = false;
    report.detail = "condition (v): edge sets differ under theta";
    return report;
  }
  return report;
}

namespace {

bool extend_isomorphism(const std::vector<ElementSet>& adj_a,
                        const std::vector<ElementSet>& adj_b,
                        std::vector<int>& mapping, std::uint64_t used,
                        int next) {
  int n = static_cast<int>(adj_a.size());
  if (next == n) return true;
  for (int candidate = 0; candidate < n; ++candidate) {
    if ((used >> candidate) & 1) continue;
    if (adj_a[next].count() != adj_b[candidate].count()) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      bool edge_a = adj_a[next].contains(prev);
      bool edge_b = adj_b[candidate].contains(mapping[prev]);
      ok = (edge_a == edge_b);
    }
    if (!ok) continue;
    mapping[next] = candidate;
    if (extend_isomorphism(adj_a, adj_b, mapping, used | (std::uint64_t{1} << candidate),
                           next + 1)) {
      return true;
    }
  }
  return false;
}

std::vector<ElementSet> adjacency_of(int n,
                                     const std::vector<std::pair<int, int>>& edges) {
  std::vector<ElementSet> adj(n);
  for (auto [u, v] : edges) {
    adj[u] = adj[u].with(v);
    adj[v] = adj[v].with(u);
  }
  return adj;
}

}  // namespace

std::optional<std::vector<int>> graph_isomorphism(
    int nodes_a, const std::vector<std::pair<int, int>>& edges_a,
    int nodes_b, const std::vector<std::pair<int, int>>& edges_b) {
  if (nodes_a != nodes_b || edges_a.size() != edges_b.size()) {
    return std::nullopt;
  }
  if (nodes_a == 0) return std::vector<int>{};
  std::vector<ElementSet> adj_a = adjacency_of(nodes_a, edges_a);
  std::vector<ElementSet> adj_b = adjacency_of(nodes_b, edges_b);
  std::vector<int> deg_a, deg_b;
  for (const auto& s : adj_a) deg_a.push_back(s.count());
  for (const auto& s : adj_b) deg_b.push_back(s.count());
  std::sort(deg_a.begin(), deg_a.end());
  std::sort(deg_b.begin(), deg_b.end());
  if (deg_a != deg_b) return std::nullopt;
  std::vector<int> mapping(nodes_a, -1);
  if (extend_isomorphism(adj_a, adj_b, mapping, 0, 0)) return mapping;
  return std::nullopt;
}

Matroid matroid_with_rotunda_graph_of(const SimpleGraph& g) {
  auto cert = is_chordal(g);
  if (!cert.chordal) {
    throw HypothesisError("matroid_with_rotunda_graph_of: graph not chordal");
  }
  std::vector<Matroid> parts;
  for (VertexSet comp : g.components()) {
    SimpleGraph sub = induced_subgraph(g, comp);
    parts.push_back(graphic_matroid(two_connectivize(sub)));
  }
  if (parts.size() == 1) return parts[0];
  return Matroid::direct_sum(parts);
}

RoundTrip roundtrip_from_chordal_graph(const SimpleGraph& g) {
  RoundTrip out;
  Matroid m = matroid_with_rotunda_graph_of(g);
  ReducedCliqueGraph rcg = reduced_clique_graph(g);
  RotundaGraph rot = rotunda_graph(m);
  auto iso = graph_isomorphism(static_cast<int>(rcg.cliques.size()),
                               rcg.edge_list(),
                               static_cast<int>(rot.nodes.size()),
                               rot.edge_list());
  out.isomorphic = iso.has_value();
  if (!out.isomorphic) {
    out.detail = "C_R(G) and R(M) are not isomorphic";
  }
  return out;
}

RoundTrip roundtrip_from_matroid(const Matroid& m) {
  RoundTrip out;
  auto [g, theta] = compliant_graph(m);
  ReducedCliqueGraph rcg = reduced_clique_graph(g);
  RotundaGraph rot = rotunda_graph(m);
  auto iso = graph_isomorphism(static_cast<int>(rot.nodes.size()),
                               rot.edge_list(),
                               static_cast<int>(rcg.cliques.size()),
                               rcg.edge_list());
  out.isomorphic = iso.has_value();
  if (!out.isomorphic) {
    out.detail = "R(M) and C_R(compliant graph) are not isomorphic";
  }
  return out;
}

}  // namespace rotunda
