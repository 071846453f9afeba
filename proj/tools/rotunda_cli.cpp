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

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rotunda/catalog.hpp"
#include "rotunda/classification.hpp"
#include "rotunda/correspondence.hpp"
#include "rotunda/dot_export.hpp"
#include "rotunda/json_io.hpp"
#include "rotunda/roundness.hpp"
#include "rotunda/suites.hpp"
#include "rotunda/treewidth.hpp"

namespace {

using nlohmann::json;
using namespace rotunda;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBoundError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + out_path);
  out << text;
}

json label_list(const Matroid& m, ElementSet s) {
  json out = json::array();
  for (int e : s) out.push_back(m.label(e));
  return out;
}

json analyze_matroid(const Matroid& m) {
  json out;
  out["kind"] = "matroid";
  out["name"] = m.name().empty() ? "(unnamed)" : m.name();
  out["elements"] = m.size();
  out["rank"] = m.rank();
  out["connected"] = m.is_connected();

  ChordalityProfile profile = classify(m);
  json cls;
  cls["supersolvable"] = profile.supersolvable;
  cls["saturated"] = profile.saturated;
  cls["c_chordal"] = profile.c_chordal;
  if (profile.chain) {
    json chain = json::array();
    for (const Flat& f : profile.chain->flats) {
      chain.push_back(label_list(m, f.elements));
    }
    cls["modular_chain"] = chain;
  }
  if (profile.round_non_modular) {
    cls["round_non_modular_flat"] =
        label_list(m, profile.round_non_modular->elements);
  }
  if (profile.chordless_circuit) {
    cls["chordless_circuit"] = label_list(m, *profile.chordless_circuit);
  }
  out["classification"] = cls;

  json rot = json::array();
  for (const Flat& f : rotunda::rotunda(m)) {
    json node;
    node["rank"] = f.rank;
    node["elements"] = label_list(m, f.elements);
    rot.push_back(node);
  }
  out["rotunda"] = rot;

  if (profile.supersolvable && profile.saturated) {
    RotundaGraph rg = rotunda_graph(m);
    json rg_json;
    rg_json["nodes"] = rg.nodes.size();
    json edges = json::array();
    for (const auto& e : rg.edges) {
      json edge;
      edge["i"] = e.a;
      edge["j"] = e.b;
      edge["weight"] = e.weight;
      edges.push_back(edge);
    }
    rg_json["edges"] = edges;
    out["rotunda_graph"] = rg_json;
    if (m.is_connected() && m.size() > 0) {
      RotundaTreesResult trees = rotunda_trees(m);
      json tree_edges = json::array();
      for (auto [u, v] : trees.trees.front().edges) {
        tree_edges.push_back({u, v});
      }
      out["rotunda_tree"] = tree_edges;
      out["tree_width"] = rotunda_treewidth(m);
    }
  }
  if (m.size() <= 6 && m.size() > 0) {
    out["tree_width_brute_force"] = brute_force_treewidth(m);
  }
  if (m.size() > 0) {
    out["round_flat_lower_bound"] = round_flat_lower_bound(m);
  }
  return out;
}

json analyze_graph(const SimpleGraph& g) {
  json out;
  out["kind"] = "graph";
  out["name"] = g.name().empty() ? "(unnamed)" : g.name();
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();

  ChordalityCertificate cert = is_chordal(g);
  out["chordal"] = cert.chordal;
  if (cert.chordal) {
    json order = json::array();
    for (int v : cert.elimination_order) order.push_back(g.vertex_label(v));
    out["perfect_elimination_order"] = order;
  } else {
    json cycle = json::array();
    for (int v : cert.induced_cycle) cycle.push_back(g.vertex_label(v));
    out["induced_cycle"] = cycle;
  }

  json cliques = json::array();
  for (VertexSet c : maximal_cliques(g)) cliques.push_back(g.label_set(c));
  out["maximal_cliques"] = cliques;

  Matroid m = graphic_matroid(g);
  json cross;
  cross["saturated"] = is_saturated(m).first;
  cross["supersolvable"] = is_supersolvable(m);
  cross["matches_chordality"] = (is_supersolvable(m) == cert.chordal);
  out["cycle_matroid_cross_check"] = cross;

  if (cert.chordal) {
    ReducedCliqueGraph rcg = reduced_clique_graph(g);
    json rcg_json;
    rcg_json["nodes"] = rcg.cliques.size();
    json edges = json::array();
    for (const auto& p : rcg.pairs) {
      if (!p.separating) continue;
      json edge;
      edge["i"] = p.a;
      edge["j"] = p.b;
      edge["weight"] = p.weight;
      edges.push_back(edge);
    }
    rcg_json["edges"] = edges;
    out["reduced_clique_graph"] = rcg_json;
    out["tree_width_bags"] = graph_tree_width(g);
    if (g.is_connected()) {
      CliqueTreesResult trees = clique_trees(g);
      json tree_edges = json::array();
      for (auto [u, v] : trees.trees.front().edges) {
        tree_edges.push_back({u, v});
      }
      out["clique_tree"] = tree_edges;
      out["clique_tree_count"] =
          trees.exhaustive ? json(trees.trees.size()) : json("not enumerated");
    }
    if (g.is_two_connected()) {
      out["rcg_equals_rotunda_graph"] =
          check_rcg_equals_rotunda_graph(g).equal;
    }
  }
  return out;
}

void print_human_summary(const json& report) {
  if (report["kind"] == "matroid") {
    std::cout << report["name"].get<std::string>() << ": "
              << report["elements"] << " elements, rank " << report["rank"]
              << (report["connected"].get<bool>() ? ", connected"
                                                  : ", disconnected")
              << "\n";
    const json& cls = report["classification"];
    std::cout << "  supersolvable=" << cls["supersolvable"]
              << " saturated=" << cls["saturated"]
              << " c-chordal=" << cls["c_chordal"] << "\n";
    std::cout << "  rotunda: " << report["rotunda"].size() << "\n";
    if (report.contains("tree_width")) {
      std::cout << "  tree-width: " << report["tree_width"] << "\n";
    } else if (report.contains("tree_width_brute_force")) {
      std::cout << "  tree-width (brute force): "
                << report["tree_width_brute_force"] << "\n";
    }
  } else {
    std::cout << report["name"].get<std::string>() << ": "
              << report["vertices"] << " vertices, " << report["edges"]
              << " edges, "
              << (report["chordal"].get<bool>() ? "chordal" : "not chordal")
              << "\n";
    std::cout << "  maximal cliques: " << report["maximal_cliques"].size()
              << "\n";
    if (report.contains("tree_width_bags")) {
      std::cout << "  tree-width (bag-size convention): "
                << report["tree_width_bags"] << "\n";
    }
  }
}

int run_analyze(const std::string& path, bool as_json) {
  std::string text = read_file(path);
  auto start = std::chrono::steady_clock::now();
  json report;
  if (detect_input_kind(text) == InputKind::Matroid) {
    report = analyze_matroid(matroid_from_json(text));
  } else {
    report = analyze_graph(graph_from_json(text));
  }
  report["input"] = path;
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    print_human_summary(report);
  }
  return 0;
}

int run_verify(const std::string& suite, const SuiteOptions& options) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  bool all_pass = true;
  for (const std::string& name : suites) {
    std::vector<CheckResult> results = run_suite(name, options);
    for (const CheckResult& r : results) {
      std::ostringstream line;
      line << (r.pass ? "[PASS] " : "[FAIL] ") << name << "/" << r.name
           << " (" << std::fixed << std::setprecision(2) << r.seconds
           << "s)";
      if (!r.pass) line << ": " << r.detail;
      std::cout << line.str() << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : kExitVerifyFailure;
}

int run_export(const std::string& path, const std::string& what,
               bool as_dot, bool as_json, const std::string& out_path) {
  if (as_dot == as_json) {
    throw InputError("export needs exactly one of --dot or --json");
  }
  std::string text = read_file(path);
  InputKind kind = detect_input_kind(text);

  if (what == "rcg" || what == "clique-tree") {
    if (kind != InputKind::Graph) {
      throw InputError("export " + what + " expects a graph file");
    }
    SimpleGraph g = graph_from_json(text);
    ReducedCliqueGraph rcg = reduced_clique_graph(g);
    if (what == "rcg") {
      if (as_dot) {
        write_output(dot_clique_graph(g, rcg, true), out_path);
      } else {
        json out;
        json nodes = json::array();
        for (VertexSet c : rcg.cliques) nodes.push_back(g.label_set(c));
        out["nodes"] = nodes;
        json edges = json::array();
        for (const auto& p : rcg.pairs) {
          if (!p.separating) continue;
          edges.push_back({{"i", p.a}, {"j", p.b}, {"weight", p.weight}});
        }
        out["edges"] = edges;
        write_output(out.dump(2) + "\n", out_path);
      }
      return 0;
    }
    CliqueTreesResult trees = clique_trees(g);
    if (as_dot) {
      write_output(dot_clique_tree(g, rcg, trees.trees.front()), out_path);
    } else {
      std::vector<std::string> labels;
      for (VertexSet c : rcg.cliques) labels.push_back(g.label_set(c));
      write_output(tree_to_json(labels, trees.trees.front()), out_path);
    }
    return 0;
  }

  // matroid-side exports accept a graph file through its cycle matroid
  Matroid m = kind == InputKind::Matroid
                  ? matroid_from_json(text)
                  : graphic_matroid(graph_from_json(text));
  if (what == "rotunda-graph") {
    RotundaGraph rg = rotunda_graph(m);
    write_output(as_dot ? dot_rotunda_graph(m, rg)
                        : rotunda_graph_to_json(m, rg),
                 out_path);
    return 0;
  }
  if (what == "rotunda-tree") {
    RotundaTreesResult trees = rotunda_trees(m);
    if (as_dot) {
      write_output(dot_rotunda_tree(m, trees.graph, trees.trees.front()),
                   out_path);
    } else {
      std::vector<std::string> labels;
      for (const Flat& f : trees.graph.nodes) {
        labels.push_back(m.label_set(f.elements));
      }
      write_output(tree_to_json(labels, trees.trees.front()), out_path);
    }
    return 0;
  }
  if (what == "compliant-graph") {
    auto [g, theta] = compliant_graph(m);
    write_output(as_dot ? dot_simple_graph(g)
                        : compliant_graph_to_json(m, g, theta),
                 out_path);
    return 0;
  }
  throw InputError("unknown export target: " + what +
                   " (known: rotunda-graph, rcg, clique-tree, rotunda-tree, "
                   "compliant-graph)");
}

int run_catalog_list(int max_n, bool classify_entries) {
  for (const CatalogEntry& entry : catalog(max_n)) {
    std::cout << entry.name << ": " << entry.matroid.size()
              << " elements, rank " << entry.matroid.rank();
    if (classify_entries && entry.matroid.size() <= enumeration_bound()) {
      ChordalityProfile profile = classify(entry.matroid);
      std::cout << ", supersolvable=" << (profile.supersolvable ? "y" : "n")
                << ", saturated=" << (profile.saturated ? "y" : "n")
                << ", c-chordal=" << (profile.c_chordal ? "y" : "n");
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rotunda: modular and round flats, rotunda graphs and trees, and "
      "matroid tree-width for small explicit matroids"};
  app.require_subcommand(1);

  int bound = 0;

  std::string analyze_path;
  bool analyze_json = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Classify a matroid or graph file and report structure");
  analyze->add_option("file", analyze_path, "matroid or graph JSON file")
      ->required();
  analyze->add_flag("--json", analyze_json, "emit the full JSON report");
  analyze->add_option("--bound", bound, "enumeration bound override");

  std::string verify_suite;
  SuiteOptions suite_options;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite over the built-in catalog");
  verify->add_option("suite", verify_suite,
                     "axioms | modularity-lemmas | roundness-lemmas | venn "
                     "| correspondence | trees | treewidth | all")
      ->required();
  verify->add_option("--graph-max-n", suite_options.graph_max_n,
                     "catalog graphs up to this vertex count");
  verify->add_option("--jobs", suite_options.jobs, "worker threads");
  verify->add_option("--bound", bound, "enumeration bound override");

  std::string export_path, export_what, export_out;
  bool export_dot = false, export_json = false;
  CLI::App* exporter = app.add_subcommand(
      "export", "Export derived structures as DOT or JSON");
  exporter->add_option("file", export_path, "matroid or graph JSON file")
      ->required();
  exporter
      ->add_option("what", export_what,
                   "rotunda-graph | rcg | clique-tree | rotunda-tree | "
                   "compliant-graph")
      ->required();
  exporter->add_flag("--dot", export_dot, "Graphviz DOT output");
  exporter->add_flag("--json", export_json, "JSON output");
  exporter->add_option("-o,--output", export_out, "output file (stdout if absent)");
  exporter->add_option("--bound", bound, "enumeration bound override");

  int catalog_max_n = 6;
  bool catalog_classify = false;
  CLI::App* list = app.add_subcommand(
      "catalog-list", "List the built-in matroid catalog");
  list->add_option("--max-n", catalog_max_n,
                   "include cycle matroids of graphs up to this size");
  list->add_flag("--classify", catalog_classify,
                 "also classify each entry");
  list->add_option("--bound", bound, "enumeration bound override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound > 0) set_enumeration_bound(bound);
    if (*analyze) return run_analyze(analyze_path, analyze_json);
    if (*verify) return run_verify(verify_suite, suite_options);
    if (*exporter) {
      return run_export(export_path, export_what, export_dot, export_json,
                        export_out);
    }
    if (*list) return run_catalog_list(catalog_max_n, catalog_classify);
  } catch (const BoundError& err) {
    std::cerr << "error (size bound): " << err.what() << "\n";
    return kExitBoundError;
  } catch (const InputError& err) {
    std::cerr << "error (input): " << err.what() << "\n";
    return kExitInputError;
  } catch (const HypothesisError& err) {
    std::cerr << "error (hypothesis): " << err.what() << "\n";
    return kExitInputError;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitVerifyFailure;
  }
  return 0;
}
