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

#ifndef ROTUNDA_CATALOG_HPP
#define ROTUNDA_CATALOG_HPP

#include <string>
#include <vector>

#include "rotunda/graph.hpp"
#include "rotunda/matroid.hpp"

namespace rotunda {

// Named fixtures used throughout the test corpus.

/// U(3,6) on elements a..f.
Matroid u36();
/// The Fano plane: GF(2) columns 1..7 (all non-zero 3-vectors).
Matroid fano();
/// Rank 3 on a..f with three-point lines {a,b,d}, {b,c,e}, {a,c,f}.
Matroid w4();
/// Dual of M(K_{3,3}): circuits are the minimal edge cuts of K_{3,3}.
Matroid dual_k33();
/// Rank 3 on {p,a,b,c,d,e,f,x}: a four-point line {p,a,b,c}, a second
/// four-point line {p,d,e,f} through p, and the lines {a,d,x}, {b,e,x},
/// {c,f,x} through x.
Matroid pabx();

/// A rank-3 matroid from its long lines (rank-2 flats with >= 3 points):
/// circuits are the 3-subsets of lines plus the line-free 4-subsets. Lines
/// must pairwise meet in at most one point.
Matroid rank3_from_lines(int size, const std::vector<ElementSet>& lines,
                         std::vector<std::string> labels = {});

/// One representative per isomorphism class of connected simple graphs on
/// exactly n vertices (canonical minimal labeling), vertices labeled
/// v0..v{n-1}. Deterministic order; memoised. Practical for n <= 7.
const std::vector<SimpleGraph>& connected_graphs(int n);

/// Connected graphs on 1..max_n vertices, concatenated.
std::vector<SimpleGraph> connected_graphs_up_to(int max_n);

struct CatalogEntry {
  std::string name;
  Matroid matroid;
};

/// The named fixtures followed by the cycle matroid of every connected
/// simple graph on up to `graph_max_n` vertices (up to isomorphism).
std::vector<CatalogEntry> catalog(int graph_max_n);

}  // namespace rotunda

#endif  // ROTUNDA_CATALOG_HPP
