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

#ifndef ROTUNDA_CORRESPONDENCE_HPP
#define ROTUNDA_CORRESPONDENCE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rotunda/graph.hpp"
#include "rotunda/matroid.hpp"
#include "rotunda/rotunda_graph.hpp"

namespace rotunda {

/// Cycle matroid of a simple graph; elements are the edges in sorted
/// (u,v) order, labeled by their endpoint labels.
Matroid graphic_matroid(const SimpleGraph& g);

/// Adds one clone per cut-vertex, adjacent to the cut-vertex and all its
/// neighbours. The result is 2-connected, is chordal whenever the input
/// is, and has the same reduced clique graph up to isomorphism.
SimpleGraph two_connectivize(const SimpleGraph& g);

/// For a 2-connected chordal G: checks that C_R(G) and R(M(G)) coincide
/// exactly under the identification of each maximal clique with its edge
/// set.
struct RcgMatchResult {
  bool equal = false;
  std::string detail;
  /// clique_to_rotunda[i] = index of the rotunda matching clique i.
  std::vector<int> clique_to_rotunda;
};
RcgMatchResult check_rcg_equals_rotunda_graph(const SimpleGraph& g);

/// theta: element -> unordered pair of companion-graph vertices.
struct ComplianceMap {
  std::vector<std::array<int, 2>> theta;  // indexed by element id

  VertexSet image(ElementSet elements) const;
  ElementSet preimage(VertexSet vertices, ElementSet domain) const;
};

/// The five compliance conditions with a witness for the first failure.
struct ComplianceReport {
  bool pairs_have_size_two = false;      // (i)
  bool vertices_covered_once = false;    // (ii)
  bool round_flats_are_cliques = false;  // (iii)
  bool modular_flats_extend = false;     // (iv)
  bool rotunda_clique_isomorphism = false;  // (v)
  std::string detail;

  bool compliant() const {
    return pairs_have_size_two && vertices_covered_once &&
           round_flats_are_cliques && modular_flats_extend &&
           rotunda_clique_isomorphism;
  }
};

/// Builds a companion 2-connected chordal graph for a connected
/// supersolvable saturated matroid by recursion along a modular chain:
/// rank <= 1 gives a complete graph on 2|E| vertices; each further chain
/// step adds 2|C*| new vertices joined to the clique of R ∩ H. All
/// arbitrary choices are made in ascending element order.
std::pair<SimpleGraph, ComplianceMap> compliant_graph(const Matroid& m);

/// Evaluates all five conditions. Condition (iv) quantifies over every
/// modular flat and every union of components of G - theta(F); it is
/// limited to matroids with at most 12 elements.
ComplianceReport check_compliance(const Matroid& m, const SimpleGraph& g,
                                  const ComplianceMap& theta);

/// Exact graph isomorphism by backtracking; suitable for the small
/// clique/rotunda graphs handled here. Returns a node mapping from the
/// first graph onto the second when one exists.
std::optional<std::vector<int>> graph_isomorphism(
    int nodes_a, const std::vector<std::pair<int, int>>& edges_a,
    int nodes_b, const std::vector<std::pair<int, int>>& edges_b);

/// The two round-trip directions behind "reduced clique graphs and rotunda
/// graphs are the same class of graphs".
///
/// From a chordal graph: 2-connectivize each component, take the direct
/// sum of the cycle matroids, and check C_R(G) ≅ R(M).
struct RoundTrip {
  bool isomorphic = false;
  std::string detail;
};
RoundTrip roundtrip_from_chordal_graph(const SimpleGraph& g);
Matroid matroid_with_rotunda_graph_of(const SimpleGraph& g);

/// From a connected supersolvable saturated matroid: build the compliant
/// graph and check R(M) ≅ C_R(G).
RoundTrip roundtrip_from_matroid(const Matroid& m);

}  // namespace rotunda

#endif  // ROTUNDA_CORRESPONDENCE_HPP
