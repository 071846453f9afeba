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

#include "rotunda/graph.hpp"

#include <algorithm>
#include <deque>

#include "rotunda/errors.hpp"

namespace rotunda {

SimpleGraph::SimpleGraph(std::vector<std::string> vertex_labels)
    : labels_(std::move(vertex_labels)), adj_(labels_.size()) {
  if (labels_.size() > 64) {
    throw InputError("at most 64 vertices are supported");
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate vertex label");
  }
}

SimpleGraph SimpleGraph::with_vertex_count(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return SimpleGraph(std::move(labels));
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g = with_vertex_count(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g = with_vertex_count(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

int SimpleGraph::add_vertex(const std::string& label) {
  if (vertex_count() >= 64) {
    throw InputError("at most 64 vertices are supported");
  }
  if (vertex_by_label(label) >= 0) {
    throw InputError("duplicate vertex label: " + label);
  }
  labels_.push_back(label);
  adj_.emplace_back();
  return vertex_count() - 1;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw InputError("edge endpoint out of range");
  }
  if (u == v) throw InputError("self-loops are not allowed in simple graphs");
  adj_[u] = adj_[u].with(v);
  adj_[v] = adj_[v].with(u);
}

void SimpleGraph::add_edge(const std::string& u, const std::string& v) {
  int ui = vertex_by_label(u);
  int vi = vertex_by_label(v);
  if (ui < 0) throw InputError("unknown vertex label: " + u);
  if (vi < 0) throw InputError("unknown vertex label: " + v);
  add_edge(ui, vi);
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (const VertexSet& nb : adj_) total += nb.count();
  return total / 2;
}

int SimpleGraph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (labels_[v] == label) return v;
  }
  return -1;
}

std::string SimpleGraph::label_set(VertexSet vs) const {
  std::string out = "{";
  bool first = true;
  for (int v : vs) {
    if (!first) out += ",";
    out += labels_[v];
    first = false;
  }
  return out + "}";
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_clique(VertexSet vs) const {
  for (int v : vs) {
    if (!(vs.without(v)).subset_of(adj_[v])) return false;
  }
  return true;
}

VertexSet SimpleGraph::reachable(VertexSet start, VertexSet forbidden) const {
  VertexSet reached = start - forbidden;
  VertexSet frontier = reached;
  while (!frontier.is_empty()) {
    VertexSet next;
    for (int v : frontier) next = next | adj_[v];
    next = next - forbidden;
    frontier = next - reached;
    reached = reached | next;
  }
  return reached;
}

bool SimpleGraph::is_connected() const {
  if (vertex_count() == 0) return true;
  return reachable(VertexSet::single(0), VertexSet()) == vertices();
}

std::vector<int> SimpleGraph::cut_vertices() const {
  std::vector<int> out;
  auto component_count = [&](VertexSet forbidden) {
    int count = 0;
    VertexSet todo = vertices() - forbidden;
    while (!todo.is_empty()) {
      VertexSet comp = reachable(VertexSet::single(todo.lowest()), forbidden);
      todo = todo - comp;
      ++count;
    }
    return count;
  };
  int base = component_count(VertexSet());
  for (int v = 0; v < vertex_count(); ++v) {
    if (component_count(VertexSet::single(v)) > base) out.push_back(v);
  }
  return out;
}

bool SimpleGraph::is_two_connected() const {
  return is_connected() && cut_vertices().empty();
}

std::vector<VertexSet> SimpleGraph::components() const {
  std::vector<VertexSet> out;
  VertexSet todo = vertices();
  while (!todo.is_empty()) {
    VertexSet comp = reachable(VertexSet::single(todo.lowest()), VertexSet());
    out.push_back(comp);
    todo = todo - comp;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChordalityCertificate is_chordal(const SimpleGraph& g) {
  ChordalityCertificate cert;
  VertexSet remaining = g.vertices();
  while (!remaining.is_empty()) {
    int simplicial = -1;
    for (int v : remaining) {
      if (g.is_clique(g.neighbors(v) & remaining)) {
        simplicial = v;
        break;
      }
    }
    if (simplicial < 0) break;
    cert.elimination_order.push_back(simplicial);
    remaining = remaining.without(simplicial);
  }
  if (remaining.is_empty()) {
    cert.chordal = true;
    return cert;
  }

  // No simplicial vertex left: the remaining induced subgraph holds an
  // induced cycle of length >= 4. Take non-adjacent u,w in N(v) and a
  // shortest u-w path avoiding the rest of N[v].
  for (int v : remaining) {
    VertexSet nb = g.neighbors(v) & remaining;
    for (int u : nb) {
      for (int w : nb) {
        if (w <= u || g.adjacent(u, w)) continue;
        VertexSet forbidden =
            (g.vertices() - remaining) | (nb | VertexSet::single(v))
                .without(u)
                .without(w);
        // BFS shortest path u -> w avoiding `forbidden`
        std::vector<int> parent(g.vertex_count(), -1);
        std::deque<int> queue = {u};
        VertexSet seen = VertexSet::single(u);
        bool found = false;
        while (!queue.empty() && !found) {
          int x = queue.front();
          queue.pop_front();
          for (int y : g.neighbors(x) - forbidden - seen) {
            parent[y] = x;
            seen = seen.with(y);
            if (y == w) {
              found = true;
              break;
            }
            queue.push_back(y);
          }
        }
        if (!found) continue;
        std::vector<int> path;
        for (int x = w; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());  // u .. w
        cert.induced_cycle.push_back(v);
        cert.induced_cycle.insert(cert.induced_cycle.end(), path.begin(),
                                  path.end());
        cert.chordal = false;
        return cert;
      }
    }
  }
  throw Error("is_chordal: no induced cycle found in a non-chordal graph");
}

namespace {

void bron_kerbosch(const SimpleGraph& g, VertexSet r, VertexSet p,
                   VertexSet x, std::vector<VertexSet>& out) {
  if (p.is_empty() && x.is_empty()) {
    out.push_back(r);
    return;
  }
  // pivot with the most neighbours in P
  int pivot = -1, best = -1;
  for (int v : p | x) {
    int deg = (g.neighbors(v) & p).count();
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p = p.without(v);
    x = x.with(v);
  }
}

std::vector<std::string> sorted_labels(const SimpleGraph& g, VertexSet vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.vertex_label(v));
  std::sort(out.begin(), out.end());
  return out;
}

void sort_cliques_canonically(const SimpleGraph& g,
                              std::vector<VertexSet>& cliques) {
  std::sort(cliques.begin(), cliques.end(),
            [&](VertexSet a, VertexSet b) {
              if (a.count() != b.count()) return a.count() < b.count();
              return sorted_labels(g, a) < sorted_labels(g, b);
            });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const SimpleGraph& g,
                                       int vertex_bound) {
  if (g.vertex_count() > vertex_bound) {
    throw BoundError("maximal_cliques: graph has " +
                     std::to_string(g.vertex_count()) +
                     " vertices, bound is " + std::to_string(vertex_bound));
  }
  std::vector<VertexSet> out;
  if (g.vertex_count() == 0) return out;
  bron_kerbosch(g, VertexSet(), g.vertices(), VertexSet(), out);
  sort_cliques_canonically(g, out);
  return out;
}

std::vector<VertexSet> all_cliques(const SimpleGraph& g, int vertex_bound) {
  if (g.vertex_count() > vertex_bound) {
    throw BoundError("all_cliques: vertex bound exceeded");
  }
  std::vector<VertexSet> out = {VertexSet()};
  // grow each clique only by vertices above its largest member
  for (std::size_t i = 0; i < out.size(); ++i) {
    VertexSet c = out[i];
    int start = 0;
    for (int u : c) start = u + 1;
    for (int v = start; v < g.vertex_count(); ++v) {
      if (c.subset_of(g.neighbors(v))) out.push_back(c.with(v));
    }
  }
  sort_cliques_canonically(g, out);
  return out;
}

bool is_separating_pair(const SimpleGraph& g, VertexSet c1, VertexSet c2) {
  VertexSet common = c1 & c2;
  if (common.is_empty()) return false;
  VertexSet side1 = c1 - c2;
  VertexSet side2 = c2 - c1;
  if (side1.is_empty() || side2.is_empty()) return false;
  return !g.reachable(side1, common).intersects(side2);
}

CliqueWeighting clique_cardinality_weighting() {
  return [](VertexSet x) { return x.count(); };
}

void validate_clique_weighting(const std::vector<VertexSet>& cliques,
                               const CliqueWeighting& sigma) {
  std::vector<VertexSet> domain = {VertexSet()};
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      domain.push_back(cliques[i] & cliques[j]);
    }
  }
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  if (sigma(VertexSet()) != 0) {
    throw HypothesisError("weighting violates sigma(empty) = 0");
  }
  for (VertexSet a : domain) {
    for (VertexSet b : domain) {
      if (a.proper_subset_of(b) && sigma(a) >= sigma(b)) {
        throw HypothesisError(
            "weighting is not strictly monotone on nested intersections");
      }
    }
  }
}

std::vector<std::pair<int, int>> ReducedCliqueGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (const Pair& p : pairs) {
    if (p.separating) out.emplace_back(p.a, p.b);
  }
  return out;
}

std::vector<int> ReducedCliqueGraph::edge_weights() const {
  std::vector<int> out;
  for (const Pair& p : pairs) {
    if (p.separating) out.push_back(p.weight);
  }
  return out;
}

ReducedCliqueGraph reduced_clique_graph(const SimpleGraph& g,
                                        const CliqueWeighting& sigma) {
  if (!is_chordal(g).chordal) {
    throw HypothesisError("reduced_clique_graph: graph is not chordal");
  }
  ReducedCliqueGraph rcg;
  rcg.cliques = maximal_cliques(g);
  validate_clique_weighting(rcg.cliques, sigma);
  int k = static_cast<int>(rcg.cliques.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      VertexSet inter = rcg.cliques[a] & rcg.cliques[b];
      if (inter.is_empty()) continue;
      ReducedCliqueGraph::Pair pair;
      pair.a = a;
      pair.b = b;
      pair.weight = sigma(inter);
      pair.separating = is_separating_pair(g, rcg.cliques[a], rcg.cliques[b]);
      rcg.pairs.push_back(pair);
    }
  }
  return rcg;
}

ReducedCliqueGraph reduced_clique_graph(const SimpleGraph& g) {
  return reduced_clique_graph(g, clique_cardinality_weighting());
}

CliqueTreesResult clique_trees(const SimpleGraph& g,
                               const CliqueWeighting& sigma,
                               int clique_enum_bound) {
  if (!g.is_connected()) {
    throw HypothesisError(
        "clique_trees: graph is disconnected; analyze components separately");
  }
  CliqueTreesResult result;
  result.rcg = reduced_clique_graph(g, sigma);
  int k = static_cast<int>(result.rcg.cliques.size());
  auto host_edges = result.rcg.edge_list();
  auto host_weights = result.rcg.edge_weights();

  if (k > clique_enum_bound) {
    std::uint64_t best =
        max_weight_spanning_tree(k, host_edges, host_weights);
    result.trees.push_back(tree_from_edge_mask(k, host_edges, best));
    result.exhaustive = false;
    return result;
  }

  std::vector<std::uint64_t> spanning = enumerate_spanning_trees(k, host_edges);
  long long best_weight = -1;
  std::vector<std::uint64_t> max_weight_masks;
  for (std::uint64_t mask : spanning) {
    long long w = tree_weight(mask, host_weights);
    if (w > best_weight) {
      best_weight = w;
      max_weight_masks.clear();
    }
    if (w == best_weight) max_weight_masks.push_back(mask);
  }

  std::vector<std::uint64_t> clique_tree_masks;
  for (std::uint64_t mask : spanning) {
    Tree tree = tree_from_edge_mask(k, host_edges, mask);
    bool ok = true;
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      ElementSet holders;
      for (int i = 0; i < k; ++i) {
        if (result.rcg.cliques[i].contains(v)) holders = holders.with(i);
      }
      ok = tree.induces_subtree(holders);
    }
    if (ok) {
      clique_tree_masks.push_back(mask);
      result.trees.push_back(tree);
    }
  }

  if (clique_tree_masks != max_weight_masks) {
    throw Error(
        "clique_trees: subtree-property trees differ from maximum-weight "
        "spanning trees; this indicates a bug");
  }
  return result;
}

CliqueTreesResult clique_trees(const SimpleGraph& g) {
  return clique_trees(g, clique_cardinality_weighting(), 9);
}

int graph_tree_width(const SimpleGraph& g) {
  auto cert = is_chordal(g);
  if (!cert.chordal) {
    throw HypothesisError("graph_tree_width: graph is not chordal");
  }
  int best = 0;
  for (VertexSet c : maximal_cliques(g)) best = std::max(best, c.count());
  return best;
}

}  // namespace rotunda
