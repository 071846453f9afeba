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

#ifndef ROTUNDA_DOT_EXPORT_HPP
#define ROTUNDA_DOT_EXPORT_HPP

#include <string>

#include "rotunda/graph.hpp"
#include "rotunda/matroid.hpp"
#include "rotunda/rotunda_graph.hpp"

namespace rotunda {

// All writers emit deterministic node ids: "C0","C1",... for cliques and
// "R0","R1",... for rotunda. Edge labels carry the weighting as
// "σ=<w>"; rotunda-graph edges carry the certificate flats as a tooltip.

std::string dot_clique_graph(const SimpleGraph& g,
                             const ReducedCliqueGraph& rcg,
                             bool reduced_only);
std::string dot_clique_tree(const SimpleGraph& g,
                            const ReducedCliqueGraph& rcg, const Tree& tree);
std::string dot_rotunda_graph(const Matroid& m, const RotundaGraph& rg);
std::string dot_rotunda_tree(const Matroid& m, const RotundaGraph& rg,
                             const Tree& tree);
std::string dot_simple_graph(const SimpleGraph& g);

}  // namespace rotunda

#endif  // ROTUNDA_DOT_EXPORT_HPP
