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

#include "rotunda/json_io.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "matroid_impl.hpp"

namespace rotunda {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw InputError(std::string("JSON parse error: ") + err.what());
  }
}

std::string field_error(const std::string& type, const std::string& field) {
  return "matroid file of type \"" + type + "\" needs field \"" + field +
         "\"";
}

// Element labels appearing in circuit/basis style files, ids by first
// appearance unless an explicit "elements" list pins the order.
struct LabelTable {
  std::vector<std::string> labels;
  std::map<std::string, int> index;

  int id_of(const std::string& label, bool allow_new) {
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    if (!allow_new) {
      throw InputError("unknown element label: " + label);
    }
    int id = static_cast<int>(labels.size());
    labels.push_back(label);
    index[label] = id;
    return id;
  }
};

Matroid matroid_from_value(const json& value);

Matroid sets_matroid_from_value(const json& value, const std::string& type) {
  LabelTable table;
  bool fixed = false;
  if (value.contains("elements")) {
    for (const auto& label : value.at("elements")) {
      table.id_of(label.get<std::string>(), true);
    }
    fixed = true;
  }
  std::vector<ElementSet> sets;
  for (const auto& entry : value.at(type)) {
    ElementSet s;
    for (const auto& label : entry) {
      s = s.with(table.id_of(label.get<std::string>(), !fixed));
    }
    sets.push_back(s);
  }
  int n = static_cast<int>(table.labels.size());
  if (type == "circuits") {
    return Matroid::from_circuits(n, sets, table.labels);
  }
  return Matroid::from_bases(n, sets, table.labels);
}

Matroid matroid_from_value(const json& value) {
  if (!value.is_object() || !value.contains("type")) {
    throw InputError("matroid file needs a \"type\" field");
  }
  std::string type = value.at("type").get<std::string>();
  Matroid m = [&]() -> Matroid {
    if (type == "graphic") {
      if (!value.contains("edges")) throw InputError(field_error(type, "edges"));
      LabelTable vertices;
      if (value.contains("vertices")) {
        for (const auto& label : value.at("vertices")) {
          vertices.id_of(label.get<std::string>(), true);
        }
      }
      std::vector<std::pair<int, int>> edges;
      for (const auto& edge : value.at("edges")) {
        if (!edge.is_array() || edge.size() != 2) {
          throw InputError("graphic edge entries must be [u, v] pairs");
        }
        int u = vertices.id_of(edge[0].get<std::string>(), true);
        int v = vertices.id_of(edge[1].get<std::string>(), true);
        edges.emplace_back(u, v);
      }
      return Matroid::graphic(static_cast<int>(vertices.labels.size()),
                              edges, {}, vertices.labels);
    }
    if (type == "uniform") {
      if (!value.contains("rank")) throw InputError(field_error(type, "rank"));
      if (!value.contains("size")) throw InputError(field_error(type, "size"));
      std::vector<std::string> labels;
      if (value.contains("elements")) {
        for (const auto& label : value.at("elements")) {
          labels.push_back(label.get<std::string>());
        }
      }
      return Matroid::uniform(value.at("rank").get<int>(),
                              value.at("size").get<int>(), labels);
    }
    if (type == "linear") {
      if (!value.contains("field")) throw InputError(field_error(type, "field"));
      if (!value.contains("matrix")) throw InputError(field_error(type, "matrix"));
      std::vector<std::vector<int>> rows;
      for (const auto& row : value.at("matrix")) {
        rows.push_back(row.get<std::vector<int>>());
      }
      std::vector<std::string> labels;
      if (value.contains("elements")) {
        for (const auto& label : value.at("elements")) {
          labels.push_back(label.get<std::string>());
        }
      }
      return Matroid::linear(value.at("field").get<int>(), rows, labels);
    }
    if (type == "circuits") {
      if (!value.contains("circuits")) {
        throw InputError(field_error(type, "circuits"));
      }
      return sets_matroid_from_value(value, "circuits");
    }
    if (type == "bases") {
      if (!value.contains("bases")) throw InputError(field_error(type, "bases"));
      return sets_matroid_from_value(value, "bases");
    }
    if (type == "direct_sum") {
      if (!value.contains("parts")) throw InputError(field_error(type, "parts"));
      std::vector<Matroid> parts;
      for (const auto& part : value.at("parts")) {
        parts.push_back(matroid_from_value(part));
      }
      return Matroid::direct_sum(parts);
    }
    throw InputError("unknown matroid type: " + type);
  }();
  if (value.contains("name")) {
    m = m.named(value.at("name").get<std::string>());
  }
  return m;
}

json matroid_to_value(const Matroid& m) {
  json out;
  if (!m.name().empty()) out["name"] = m.name();
  const detail::MatroidImpl& impl = m.impl();
  switch (m.rep_kind()) {
    case Matroid::RepKind::Graphic: {
      const auto& rep = std::get<detail::GraphicRep>(impl.rep);
      out["type"] = "graphic";
      out["vertices"] = rep.vertex_labels;
      json edges = json::array();
      for (auto [u, v] : rep.edges) {
        edges.push_back({rep.vertex_labels[u], rep.vertex_labels[v]});
      }
      out["edges"] = edges;
      break;
    }
    case Matroid::RepKind::Uniform: {
      const auto& rep = std::get<detail::UniformRep>(impl.rep);
      out["type"] = "uniform";
      out["rank"] = rep.rank;
      out["size"] = impl.n;
      out["elements"] = impl.labels;
      break;
    }
    case Matroid::RepKind::Linear: {
      const auto& rep = std::get<detail::LinearRep>(impl.rep);
      out["type"] = "linear";
      out["field"] = rep.field;
      json rows = json::array();
      for (const auto& row : rep.matrix) {
        rows.push_back(std::vector<int>(row.begin(), row.end()));
      }
      out["matrix"] = rows;
      out["elements"] = impl.labels;
      break;
    }
    case Matroid::RepKind::Circuits: {
      const auto& rep = std::get<detail::CircuitsRep>(impl.rep);
      out["type"] = "circuits";
      out["elements"] = impl.labels;
      json sets = json::array();
      for (ElementSet c : rep.circuits) {
        json one = json::array();
        for (int e : c) one.push_back(impl.labels[e]);
        sets.push_back(one);
      }
      out["circuits"] = sets;
      break;
    }
    case Matroid::RepKind::Bases: {
      const auto& rep = std::get<detail::BasesRep>(impl.rep);
      out["type"] = "bases";
      out["elements"] = impl.labels;
      json sets = json::array();
      for (ElementSet b : rep.bases) {
        json one = json::array();
        for (int e : b) one.push_back(impl.labels[e]);
        sets.push_back(one);
      }
      out["bases"] = sets;
      break;
    }
    case Matroid::RepKind::DirectSum: {
      const auto& rep = std::get<detail::SumRep>(impl.rep);
      out["type"] = "direct_sum";
      json parts = json::array();
      for (const Matroid& part : rep.parts) {
        parts.push_back(matroid_to_value(part));
      }
      out["parts"] = parts;
      break;
    }
  }
  return out;
}

}  // namespace

InputKind detect_input_kind(const std::string& text) {
  json value = parse_text(text);
  if (value.is_object() && value.contains("type")) return InputKind::Matroid;
  if (value.is_object() && value.contains("vertices") &&
      value.contains("edges")) {
    return InputKind::Graph;
  }
  throw InputError(
      "cannot tell matroid from graph: need \"type\" or \"vertices\"");
}

Matroid matroid_from_json(const std::string& text) {
  return matroid_from_value(parse_text(text));
}

std::string matroid_to_json(const Matroid& m) {
  return matroid_to_value(m).dump(2) + "\n";
}

SimpleGraph graph_from_json(const std::string& text) {
  json value = parse_text(text);
  if (!value.is_object() || !value.contains("vertices") ||
      !value.contains("edges")) {
    throw InputError("graph file needs \"vertices\" and \"edges\"");
  }
  std::vector<std::string> labels;
  for (const auto& label : value.at("vertices")) {
    labels.push_back(label.get<std::string>());
  }
  SimpleGraph g(labels);
  for (const auto& edge : value.at("edges")) {
    if (!edge.is_array() || edge.size() != 2) {
      throw InputError("graph edge entries must be [u, v] pairs");
    }
    g.add_edge(edge[0].get<std::string>(), edge[1].get<std::string>());
  }
  if (value.contains("name")) g.set_name(value.at("name").get<std::string>());
  return g;
}

std::string graph_to_json(const SimpleGraph& g) {
  json out;
  if (!g.name().empty()) out["name"] = g.name();
  std::vector<std::string> labels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    labels.push_back(g.vertex_label(v));
  }
  out["vertices"] = labels;
  json edges = json::array();
  for (auto [u, v] : g.edges()) {
    edges.push_back({g.vertex_label(u), g.vertex_label(v)});
  }
  out["edges"] = edges;
  return out.dump(2) + "\n";
}

std::string rotunda_graph_to_json(const Matroid& m, const RotundaGraph& rg) {
  json out;
  json nodes = json::array();
  for (const Flat& f : rg.nodes) {
    json node;
    node["rank"] = f.rank;
    json elements = json::array();
    for (int e : f.elements) elements.push_back(m.label(e));
    node["elements"] = elements;
    nodes.push_back(node);
  }
  out["nodes"] = nodes;
  json edges = json::array();
  for (const auto& e : rg.edges) {
    json edge;
    edge["i"] = e.a;
    edge["j"] = e.b;
    edge["weight"] = e.weight;
    json cover = json::array();
    for (const Flat& f : {e.cover.first, e.cover.second}) {
      json side = json::array();
      for (int x : f.elements) side.push_back(m.label(x));
      cover.push_back(side);
    }
    edge["cover"] = cover;
    edges.push_back(edge);
  }
  out["edges"] = edges;
  return out.dump(2) + "\n";
}

std::string width_report_to_json(const Matroid& m,
                                 const TreeDecomposition& td,
                                 const WidthReport& report) {
  json out;
  json tree = json::array();
  for (auto [u, v] : td.tree.edges) tree.push_back({u, v});
  out["tree"] = tree;
  json bags;
  json widths;
  for (int t = 0; t < td.tree.nodes; ++t) {
    json bag = json::array();
    for (int e : td.bags[t]) bag.push_back(m.label(e));
    bags[std::to_string(t)] = bag;
    widths[std::to_string(t)] = report.node_widths[t];
  }
  out["bags"] = bags;
  out["node_widths"] = widths;
  out["width"] = report.width;
  return out.dump(2) + "\n";
}

std::string compliant_graph_to_json(const Matroid& m, const SimpleGraph& g,
                                    const ComplianceMap& theta) {
  json out = json::parse(graph_to_json(g));
  json map;
  for (int e : m.elements()) {
    map[m.label(e)] = {g.vertex_label(theta.theta[e][0]),
                       g.vertex_label(theta.theta[e][1])};
  }
  out["theta"] = map;
  return out.dump(2) + "\n";
}

std::string tree_to_json(const std::vector<std::string>& node_labels,
                         const Tree& tree) {
  json out;
  out["nodes"] = node_labels;
  json edges = json::array();
  for (auto [u, v] : tree.edges) edges.push_back({u, v});
  out["edges"] = edges;
  return out.dump(2) + "\n";
}

}  // namespace rotunda
