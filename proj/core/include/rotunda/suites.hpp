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

#ifndef ROTUNDA_SUITES_HPP
#define ROTUNDA_SUITES_HPP

#include <string>
#include <vector>

namespace rotunda {

/// One verification check over the catalog: either it passed, or `detail`
/// holds the first counterexample witness.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  /// Catalog graphs range over connected graphs with up to this many
  /// vertices (up to isomorphism).
  int graph_max_n = 6;
  /// Element cap for the exhaustive lemma checks.
  int lemma_element_bound = 8;
  /// Element cap for the brute-force tree-width oracle comparisons.
  int treewidth_element_bound = 6;
  /// Element cap for compliant-graph construction checks.
  int compliance_element_bound = 10;
  /// Rotunda/clique cap for exhaustive spanning-tree enumeration.
  int tree_enum_bound = 8;
  /// Worker threads; 0 picks the hardware concurrency.
  int jobs = 0;
};

std::vector<std::string> suite_names();

/// Runs one named suite ("axioms", "modularity-lemmas", "roundness-lemmas",
/// "venn", "correspondence", "trees", "treewidth"). Checks run on parallel
/// workers; results come back in deterministic order. Unknown names raise
/// InputError.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& options);

namespace checks {

// Granular checks, grouped by suite. Each returns a passed/failed result
// with the first counterexample in `detail`.

// axioms
CheckResult rank_axioms(const SuiteOptions&);
CheckResult closure_axioms(const SuiteOptions&);
CheckResult circuit_ranks(const SuiteOptions&);
CheckResult direct_sum_rank_additivity(const SuiteOptions&);
CheckResult dual_k33_circuits_are_bonds(const SuiteOptions&);
CheckResult connected_components_agree_with_circuits(const SuiteOptions&);

// modularity-lemmas
CheckResult modular_intersection_and_restriction(const SuiteOptions&);
CheckResult modular_short_circuit(const SuiteOptions&);
CheckResult modular_hyperplane_separation_extends(const SuiteOptions&);
CheckResult modular_hyperplane_restriction_connected(const SuiteOptions&);
CheckResult hyperplane_line_criterion_agreement(const SuiteOptions&);

// roundness-lemmas
CheckResult rotunda_cover_containment(const SuiteOptions&);
CheckResult projections_are_round(const SuiteOptions&);
CheckResult vertical_cover_lifting(const SuiteOptions&);
CheckResult modular_cover_restriction(const SuiteOptions&);
CheckResult round_flats_inside_cocircuit_closure(const SuiteOptions&);
CheckResult cocircuit_closure_is_rotunda(const SuiteOptions&);
CheckResult cocircuit_closure_meets_hyperplane_round(const SuiteOptions&);
CheckResult every_element_in_a_rotunda(const SuiteOptions&);

// venn
CheckResult venn_fixture_profiles(const SuiteOptions&);
CheckResult saturated_restriction(const SuiteOptions&);
CheckResult saturated_cover_from_hyperplane(const SuiteOptions&);
CheckResult direct_sum_classification(const SuiteOptions&);
CheckResult strong_chords_imply_c_chordal(const SuiteOptions&);
CheckResult rotunda_count_bound(const SuiteOptions&);

// correspondence
CheckResult graphic_round_flats_are_cliques(const SuiteOptions&);
CheckResult graphic_saturated_and_chordal_iff_supersolvable(
    const SuiteOptions&);
CheckResult rotunda_graph_matches_reduced_clique_graph(const SuiteOptions&);
CheckResult rotunda_graph_edges_within_reduced_clique_graph(
    const SuiteOptions&);
CheckResult two_connectivize_preserves_rcg(const SuiteOptions&);
CheckResult compliant_graph_construction(const SuiteOptions&);
CheckResult roundtrip_both_directions(const SuiteOptions&);
CheckResult isomorphism_checker_agreement(const SuiteOptions&);

// trees
CheckResult clique_trees_are_max_weight_spanning_trees(const SuiteOptions&);
CheckResult rotunda_trees_are_max_weight_spanning_trees(const SuiteOptions&);
CheckResult rotunda_graph_connected_iff_connected(const SuiteOptions&);
CheckResult rotunda_graph_of_direct_sum(const SuiteOptions&);
CheckResult rotunda_graph_restriction_step(const SuiteOptions&);

// treewidth
CheckResult round_treewidth_equals_rank(const SuiteOptions&);
CheckResult rotunda_tree_width_optimal(const SuiteOptions&);
CheckResult round_flat_bound_below_brute_force(const SuiteOptions&);
CheckResult tree_edge_modular_cover(const SuiteOptions&);
CheckResult duplication_never_decreases_width(const SuiteOptions&);
CheckResult empty_bags_never_help(const SuiteOptions&);

}  // namespace checks

}  // namespace rotunda

#endif  // ROTUNDA_SUITES_HPP
