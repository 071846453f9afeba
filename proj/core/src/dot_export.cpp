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

#include "rotunda/dot_export.hpp"

#include <sstream>

namespace rotunda {

namespace {

std::string escaped(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string dot_clique_graph(const SimpleGraph& g,
                             const ReducedCliqueGraph& rcg,
                             bool reduced_only) {
  std::ostringstream out;
  out << "graph cliques {\n";
  for (std::size_t i = 0; i < rcg.cliques.size(); ++i) {
    out << "  C" << i << " [label=\"" << escaped(g.label_set(rcg.cliques[i]))
        << "\"];\n";
  }
  for (const auto& pair : rcg.pairs) {
    if (reduced_only && !pair.separating) continue;
    out << "  C" << pair.a << " -- C" << pair.b << " [label=\"σ="
        << pair.weight << "\"";
    if (!reduced_only && !pair.separating) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_clique_tree(const SimpleGraph& g,
                            const ReducedCliqueGraph& rcg, const Tree& tree) {
  std::ostringstream out;
  out << "graph clique_tree {\n";
  for (std::size_t i = 0; i < rcg.cliques.size(); ++i) {
    out << "  C" << i << " [label=\"" << escaped(g.label_set(rcg.cliques[i]))
        << "\"];\n";
  }
  for (auto [u, v] : tree.edges) {
    int weight = (rcg.cliques[u] & rcg.cliques[v]).count();
    out << "  C" << u << " -- C" << v << " [label=\"σ=" << weight
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_rotunda_graph(const Matroid& m, const RotundaGraph& rg) {
  std::ostringstream out;
  out << "graph rotunda {\n";
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    out << "  R" << i << " [label=\""
        << escaped(m.label_set(rg.nodes[i].elements)) << "\"];\n";
  }
  for (const auto& e : rg.edges) {
    out << "  R" << e.a << " -- R" << e.b << " [label=\"σ=" << e.weight
        << "\", tooltip=\"" << escaped(m.label_set(e.cover.first.elements))
        << " | " << escaped(m.label_set(e.cover.second.elements))
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_rotunda_tree(const Matroid& m, const RotundaGraph& rg,
                             const Tree& tree) {
  std::ostringstream out;
  out << "graph rotunda_tree {\n";
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    out << "  R" << i << " [label=\""
        << escaped(m.label_set(rg.nodes[i].elements)) << "\"];\n";
  }
  for (auto [u, v] : tree.edges) {
    int weight = -1;
    for (const auto& e : rg.edges) {
      if (e.a == std::min(u, v) && e.b == std::max(u, v)) weight = e.weight;
    }
    out << "  R" << u << " -- R" << v << " [label=\"σ=" << weight
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_simple_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << escaped(g.vertex_label(v))
        << "\"];\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  v" << u << " -- v" << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rotunda
