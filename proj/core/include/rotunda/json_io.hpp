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

#ifndef ROTUNDA_JSON_IO_HPP
#define ROTUNDA_JSON_IO_HPP

#include <string>

#include "rotunda/correspondence.hpp"
#include "rotunda/graph.hpp"
#include "rotunda/matroid.hpp"
#include "rotunda/rotunda_graph.hpp"
#include "rotunda/treewidth.hpp"

namespace rotunda {

enum class InputKind { Matroid, Graph };

/// Distinguishes matroid files ({"type": ...}) from graph files
/// ({"vertices": ..., "edges": ...}).
InputKind detect_input_kind(const std::string& text);

/// Matroid file format:
///   {"name": str?, "type": "graphic"|"uniform"|"linear"|"circuits"|
///    "bases"|"direct_sum", ...}
/// with "edges": [[u,v],...] over string vertex labels (graphic),
/// "rank"/"size" (uniform), "field" and row-major "matrix" (linear),
/// "circuits"/"bases" as lists of element-label lists plus an optional
/// "elements" list fixing the ground order (otherwise ids follow first
/// appearance), and "parts" (direct_sum). Parse errors carry the location
/// reported by the JSON parser.
Matroid matroid_from_json(const std::string& text);
std::string matroid_to_json(const Matroid& m);

/// Graph file format: {"vertices": [str], "edges": [[str,str]]}.
SimpleGraph graph_from_json(const std::string& text);
std::string graph_to_json(const SimpleGraph& g);

/// {nodes: [{rank, elements}], edges: [{i, j, weight, cover: [[...],[...]]}]}
std::string rotunda_graph_to_json(const Matroid& m, const RotundaGraph& rg);

/// {tree: edges, bags: {...}, node_widths: {...}, width: n}
std::string width_report_to_json(const Matroid& m,
                                 const TreeDecomposition& td,
                                 const WidthReport& report);

/// Graph JSON plus {"theta": {element-label: [vertex, vertex]}}.
std::string compliant_graph_to_json(const Matroid& m, const SimpleGraph& g,
                                    const ComplianceMap& theta);

/// Clique or rotunda tree as JSON: {nodes: [...], edges: [[i,j],...]}.
std::string tree_to_json(const std::vector<std::string>& node_labels,
                         const Tree& tree);

}  // namespace rotunda

#endif  // ROTUNDA_JSON_IO_HPP
