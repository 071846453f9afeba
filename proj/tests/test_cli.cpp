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

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const char* bin = std::getenv("ROTUNDA_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr,
                  "ROTUNDA_CLI_BIN must point to the CLI binary");
  std::string command = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 512> buffer;
  while (fgets(buffer.data(), buffer.size(), pipe)) {
    result.output += buffer.data();
  }
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(ROTUNDA_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analyze reports the classification profile") {
  CommandResult u36 = run_cli("analyze " + fixture("u36.json") + " --json");
  CHECK(u36.exit_code == 0);
  CHECK(u36.output.find("\"supersolvable\": false") != std::string::npos);
  CHECK(u36.output.find("\"saturated\": true") != std::string::npos);
  CHECK(u36.output.find("\"c_chordal\": false") != std::string::npos);
  CHECK(u36.output.find("\"tree_width_brute_force\": 3") !=
        std::string::npos);

  CommandResult pabx = run_cli("analyze " + fixture("pabx.json") + " --json");
  CHECK(pabx.exit_code == 0);
  CHECK(pabx.output.find("\"supersolvable\": true") != std::string::npos);
  CHECK(pabx.output.find("\"saturated\": false") != std::string::npos);
  CHECK(pabx.output.find("\"c_chordal\": true") != std::string::npos);
}

TEST_CASE("analyze handles graphs") {
  CommandResult diamond =
      run_cli("analyze " + fixture("diamond.json") + " --json");
  CHECK(diamond.exit_code == 0);
  CHECK(diamond.output.find("\"chordal\": true") != std::string::npos);
  CHECK(diamond.output.find("\"tree_width_bags\": 3") != std::string::npos);
  CHECK(diamond.output.find("\"rcg_equals_rotunda_graph\": true") !=
        std::string::npos);
}

TEST_CASE("analyze output is deterministic") {
  std::string cmd = "analyze " + fixture("diamond.json") + " --json";
  std::string a = run_cli(cmd).output;
  std::string b = run_cli(cmd).output;
  // strip the timing line before comparing
  auto strip_timing = [](std::string text) {
    auto pos = text.find("\"timing_ms\"");
    if (pos != std::string::npos) {
      auto end = text.find('\n', pos);
      text.erase(pos, end - pos);
    }
    return text;
  };
  CHECK(strip_timing(a) == strip_timing(b));
}

TEST_CASE("export emits dot with weight labels") {
  CommandResult dot =
      run_cli("export " + fixture("diamond.json") + " rotunda-graph --dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("R0 -- R1") != std::string::npos);
  CHECK(dot.output.find("σ=1") != std::string::npos);

  CommandResult k4 =
      run_cli("export " + fixture("k4.json") + " rotunda-graph --dot");
  CHECK(k4.exit_code == 0);
  CHECK(k4.output.find("R0") != std::string::npos);
  CHECK(k4.output.find("--") == std::string::npos);

  CommandResult compliant = run_cli(
      "export " + fixture("diamond.json") + " compliant-graph --json");
  CHECK(compliant.exit_code == 0);
  CHECK(compliant.output.find("\"theta\"") != std::string::npos);
}

TEST_CASE("exit codes separate input, bound, and verification failures") {
  CommandResult missing = run_cli("analyze /nonexistent.json");
  CHECK(missing.exit_code == 2);

  CommandResult bad_suite = run_cli("verify no-such-suite");
  CHECK(bad_suite.exit_code == 2);

  // rotunda-graph of a non-saturated matroid: hypothesis violation
  CommandResult hypothesis =
      run_cli("export " + fixture("pabx.json") + " rotunda-graph --json");
  CHECK(hypothesis.exit_code == 2);
  CHECK(hypothesis.output.find("not saturated") != std::string::npos);

  // undersized bound makes the analysis refuse
  CommandResult bound =
      run_cli("analyze " + fixture("pabx.json") + " --bound 4");
  CHECK(bound.exit_code == 3);
}

TEST_CASE("verify runs a suite and reports per-check lines") {
  CommandResult axioms = run_cli("verify axioms --graph-max-n 3");
  CHECK(axioms.exit_code == 0);
  CHECK(axioms.output.find("[PASS] axioms/rank-axioms") != std::string::npos);
}

TEST_CASE("catalog-list prints the fixtures") {
  CommandResult list = run_cli("catalog-list --max-n 4");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("U(3,6): 6 elements, rank 3") != std::string::npos);
  CHECK(list.output.find("F7: 7 elements, rank 3") != std::string::npos);
  CHECK(list.output.find("PABX: 8 elements, rank 3") != std::string::npos);
  CHECK(list.output.find("M(K4)") != std::string::npos);
}
