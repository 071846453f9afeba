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

#include "rotunda/rotunda_graph.hpp"

#include <algorithm>

#include "rotunda/classification.hpp"
#include "rotunda/roundness.hpp"

namespace rotunda {

LegitimateWeighting LegitimateWeighting::rank() {
  LegitimateWeighting w;
  w.kind_ = Kind::Rank;
  w.kind_name_ = "rank";
  return w;
}

LegitimateWeighting LegitimateWeighting::cardinality() {
  LegitimateWeighting w;
  w.kind_ = Kind::Cardinality;
  w.kind_name_ = "cardinality";
  return w;
}

LegitimateWeighting LegitimateWeighting::custom(
    std::map<ElementSet, int> table) {
  LegitimateWeighting w;
  w.kind_ = Kind::Custom;
  w.kind_name_ = "custom";
  w.table_ = std::move(table);
  return w;
}

int LegitimateWeighting::operator()(const Matroid& m,
                                    ElementSet intersection) const {
  switch (kind_) {
    case Kind::Rank:
      return m.rank(intersection);
    case Kind::Cardinality:
      return intersection.count();
    case Kind::Custom: {
      auto it = table_.find(intersection);
      if (it == table_.end()) {
        throw HypothesisError(
            "custom weighting has no value for " + m.label_set(intersection));
      }
      return it->second;
    }
  }
  return 0;
}

void LegitimateWeighting::validate(const Matroid& m,
                                   const std::vector<Flat>& rotunda) const {
  std::vector<ElementSet> domain = {ElementSet::empty()};
  for (std::size_t i = 0; i < rotunda.size(); ++i) {
    for (std::size_t j = i + 1; j < rotunda.size(); ++j) {
      domain.push_back(rotunda[i].elements & rotunda[j].elements);
    }
  }
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  if ((*this)(m, ElementSet::empty()) != 0) {
    throw HypothesisError("weighting violates sigma(empty) = 0");
  }
  for (ElementSet a : domain) {
    for (ElementSet b : domain) {
      if (a.proper_subset_of(b) && (*this)(m, a) >= (*this)(m, b)) {
        throw HypothesisError(
            "weighting is not strictly monotone on nested intersections (" +
            m.label_set(a) + " vs " + m.label_set(b) + ")");
      }
    }
  }
}

std::vector<std::pair<int, int>> RotundaGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : edges) out.emplace_back(e.a, e.b);
  return out;
}

std::vector<int> RotundaGraph::edge_weights() const {
  std::vector<int> out;
  for (const Edge& e : edges) out.push_back(e.weight);
  return out;
}

RotundaGraph rotunda_graph(const Matroid& m,
                           const LegitimateWeighting& sigma) {
  if (!is_supersolvable(m)) {
    throw HypothesisError(
        "rotunda_graph: matroid is not supersolvable (the rotunda graph is "
        "defined for supersolvable saturated matroids)");
  }
  if (auto [saturated, witness] = is_saturated(m); !saturated) {
    throw HypothesisError(
        "rotunda_graph: matroid is not saturated; round non-modular flat " +
        m.label_set(witness->elements));
  }

  RotundaGraph rg;
  rg.nodes = rotunda(m);
  sigma.validate(m, rg.nodes);

  std::vector<Flat> mods = modular_flats(m);  // (rank asc, bitset asc)
  ElementSet ground = m.elements();
  int k = static_cast<int>(rg.nodes.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      ElementSet ra = rg.nodes[a].elements;
      ElementSet rb = rg.nodes[b].elements;
      ElementSet inter = ra & rb;
      if (inter.is_empty()) continue;
      // first certifying cover in canonical flat order
      bool found = false;
      for (const Flat& f1 : mods) {
        if (found) break;
        if (f1.elements == ground || !ra.subset_of(f1.elements)) continue;
        for (const Flat& f2 : mods) {
          if (f2.elements == ground || !rb.subset_of(f2.elements)) continue;
          if ((f1.elements | f2.elements) != ground) continue;
          if ((f1.elements & f2.elements) != inter) continue;
          RotundaGraph::Edge edge;
          edge.a = a;
          edge.b = b;
          edge.weight = sigma(m, inter);
          edge.cover = {f1, f2};
          rg.edges.push_back(edge);
          found = true;
          break;
        }
      }
    }
  }
  return rg;
}

RotundaGraph rotunda_graph(const Matroid& m) {
  return rotunda_graph(m, LegitimateWeighting::rank());
}

bool is_rotunda_tree(const Matroid& m, const Tree& tree,
                     const std::vector<ElementSet>& bags) {
  if (static_cast<int>(bags.size()) != tree.nodes) {
    throw HypothesisError("is_rotunda_tree: one bag per tree node required");
  }
  std::vector<Flat> rot = rotunda(m);
  std::vector<ElementSet> sorted_bags = bags;
  std::sort(sorted_bags.begin(), sorted_bags.end());
  if (std::adjacent_find(sorted_bags.begin(), sorted_bags.end()) !=
      sorted_bags.end()) {
    throw HypothesisError("is_rotunda_tree: tau is not injective");
  }
  std::vector<ElementSet> rot_sets;
  for (const Flat& f : rot) rot_sets.push_back(f.elements);
  std::sort(rot_sets.begin(), rot_sets.end());
  if (sorted_bags != rot_sets) {
    throw HypothesisError(
        "is_rotunda_tree: tau is not a bijection onto the rotunda");
  }
  for (int x : m.elements()) {
    ElementSet holders;
    for (int i = 0; i < tree.nodes; ++i) {
      if (bags[i].contains(x)) holders = holders.with(i);
    }
    if (!tree.induces_subtree(holders)) return false;
  }
  return true;
}

RotundaTreesResult rotunda_trees(const Matroid& m,
                                 const LegitimateWeighting& sigma,
                                 int rotunda_enum_bound) {
  if (!m.is_connected()) {
    throw HypothesisError(
        "rotunda_trees: matroid is disconnected; analyze its connected "
        "components separately");
  }
  RotundaTreesResult result;
  result.graph = rotunda_graph(m, sigma);
  int k = static_cast<int>(result.graph.nodes.size());
  auto host_edges = result.graph.edge_list();
  auto host_weights = result.graph.edge_weights();

  std::vector<ElementSet> bags;
  for (const Flat& f : result.graph.nodes) bags.push_back(f.elements);

  if (k > rotunda_enum_bound) {
    std::uint64_t best = max_weight_spanning_tree(k, host_edges, host_weights);
    Tree tree = tree_from_edge_mask(k, host_edges, best);
    if (!is_rotunda_tree(m, tree, bags)) {
      throw Error(
          "rotunda_trees: maximum-weight spanning tree fails the "
          "running-intersection check; this indicates a bug");
    }
    result.trees.push_back(std::move(tree));
    result.exhaustive = false;
    return result;
  }

  std::vector<std::uint64_t> spanning =
      enumerate_spanning_trees(k, host_edges);
  long long best_weight = -1;
  std::vector<std::uint64_t> max_masks;
  for (std::uint64_t mask : spanning) {
    long long w = tree_weight(mask, host_weights);
    if (w > best_weight) {
      best_weight = w;
      max_masks.clear();
    }
    if (w == best_weight) max_masks.push_back(mask);
  }
  std::vector<std::uint64_t> tree_masks;
  for (std::uint64_t mask : spanning) {
    Tree tree = tree_from_edge_mask(k, host_edges, mask);
    if (is_rotunda_tree(m, tree, bags)) {
      tree_masks.push_back(mask);
      result.trees.push_back(std::move(tree));
    }
  }
  if (tree_masks != max_masks) {
    throw Error(
        "rotunda_trees: running-intersection trees differ from "
        "maximum-weight spanning trees; this indicates a bug");
  }
  return result;
}

RotundaTreesResult rotunda_trees(const Matroid& m) {
  return rotunda_trees(m, LegitimateWeighting::rank(), 9);
}

ModularCover modular_cover_of_tree_edge(const Matroid& m,
                                        const RotundaGraph& graph,
                                        const Tree& tree, int edge_index) {
  if (edge_index < 0 || edge_index >= static_cast<int>(tree.edges.size())) {
    throw InputError("modular_cover_of_tree_edge: edge index out of range");
  }
  auto [u1, u2] = tree.edges[edge_index];
  // nodes on u1's side after deleting the edge
  auto adj = tree.adjacency();
  ElementSet side = ElementSet::single(u1);
  ElementSet frontier = side;
  while (!frontier.is_empty()) {
    ElementSet next;
    for (int v : frontier) next = next | adj[v];
    next = next.without(u2);
    frontier = next - side;
    side = side | next;
  }
  ElementSet f1, f2;
  for (int i = 0; i < tree.nodes; ++i) {
    if (side.contains(i)) {
      f1 = f1 | graph.nodes[i].elements;
    } else {
      f2 = f2 | graph.nodes[i].elements;
    }
  }
  ElementSet expect =
      graph.nodes[u1].elements & graph.nodes[u2].elements;
  bool ok = m.is_flat(f1) && m.is_flat(f2) && is_modular_flat(m, f1) &&
            is_modular_flat(m, f2) && (f1 | f2) == m.elements() &&
            f1 != m.elements() && f2 != m.elements() &&
            (f1 & f2) == expect;
  if (!ok) {
    throw Error(
        "modular_cover_of_tree_edge: the bag unions do not form the "
        "expected modular cover (bug or non-rotunda-tree input)");
  }
  Flat flat1{f1, m.rank(f1)};
  Flat flat2{f2, m.rank(f2)};
  if (flat2 < flat1) std::swap(flat1, flat2);
  return {flat1, flat2};
}

}  // namespace rotunda
