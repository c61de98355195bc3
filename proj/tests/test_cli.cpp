// Copyright 2026 The cartier library developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.
//
// End-to-end checks of the command-line tool: exit codes, JSON and CSV
// shapes, determinism, and --output redirection.  The binary path is
// injected by the build as CARTIER_CLI_PATH.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + CARTIER_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json parse(const CliResult& r) {
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& tag) {
  return std::filesystem::temp_directory_path() /
         ("cartier_cli_test_" + tag + ".out");
}

}  // namespace

TEST_CASE("anumber --method all reports consistent routes and exits 0") {
  const CliResult r = run_cli("anumber --p 5 --s 2 --method all");
  REQUIRE(r.exit_code == 0);
  const json j = parse(r);
  CHECK(j["consistent"] == true);
  CHECK(j["nabla"]["p"] == 5);
  CHECK(j["nabla"]["genus"] == 4);
  CHECK(j["nabla"]["rank"] == 0);
  CHECK(j["nabla"]["a_number"] == 4);
  CHECK(j["closed"]["rank"] == 0);
  CHECK(j["closed"]["a_number"] == 4);
  CHECK(j["congruence_half"] == 0);
  CHECK(j["congruence_full"] == 0);
  CHECK(j["h_ranges_agree"] == true);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::string args = "anumber --p 3 --s 4 --method all";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.exit_code == second.exit_code);
  CHECK(first.out == second.out);
  const json j = parse(first);
  CHECK(j["nabla"]["rank"] == 8);
  CHECK(j["nabla"]["a_number"] == 8);
  CHECK(j["congruence_half"] == 5);  // truncated h-range undercounts here
  CHECK(j["congruence_full"] == 8);
  CHECK(j["h_ranges_agree"] == false);
  CHECK(j["consistent"] == true);
}

TEST_CASE("anumber single-method reports") {
  const CliResult half =
      run_cli("anumber --p 3 --s 4 --method congruence --h-range half");
  REQUIRE(half.exit_code == 0);
  CHECK(parse(half)["rank"] == 5);

  const CliResult full = run_cli("anumber --p 3 --s 4 --method congruence");
  REQUIRE(full.exit_code == 0);
  CHECK(parse(full)["rank"] == 8);

  const CliResult closed = run_cli("anumber --p 3 --s 4 --method closed");
  REQUIRE(closed.exit_code == 0);
  const json j = parse(closed);
  CHECK(j["rank"] == 8);
  CHECK(j["a_number"] == 8);
  CHECK(j["method"] == "closed_formula");
  CHECK(j["basis_mode"].is_null());
}

TEST_CASE("unstable alternative basis yields a structured error and exit 1") {
  const CliResult r = run_cli("anumber --p 3 --s 4 --basis-mode swapped");
  CHECK(r.exit_code == 1);
  const json j = parse(r);
  CHECK(j["error"] == "BasisNotStable");
  CHECK(j["element"] == json::array({0, 2}));
  CHECK(j["escaped"] == json::array({1, 3}));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("anumber --p 4 --s 2").exit_code == 2);    // p not prime
  CHECK(run_cli("anumber --p 3 --s 2 --format csv").exit_code == 2);
  CHECK(run_cli("anumber --p 3 --s 2 --t 3 --method closed").exit_code == 2);
  CHECK(run_cli("conjecture --ell 3 --r 1").exit_code == 2);  // r < 2
  CHECK(run_cli("").exit_code == 2);                          // no subcommand
  CHECK(run_cli("points --p 3 --ell 3").exit_code == 2);      // mixed families
}

TEST_CASE("--help exits 0 and lists the subcommands") {
  const CliResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("anumber") != std::string::npos);
  CHECK(r.out.find("rank-table") != std::string::npos);
  CHECK(r.out.find("conjecture") != std::string::npos);
}

TEST_CASE("points over the natural even-degree field misses the literature "
          "count and exits 1") {
  const CliResult r = run_cli("points --p 3 --s 2");
  CHECK(r.exit_code == 1);
  const json j = parse(r);
  CHECK(j["family"] == "artin_schreier");
  CHECK(j["degree"] == 4);
  CHECK(j["field_order"] == 81);
  CHECK(j["affine"] == 63);
  CHECK(j["at_infinity"] == 1);
  CHECK(j["count"] == 64);
  CHECK(j["hasse_weil_bound"] == 100);
  CHECK(j["maximal"] == false);
}

TEST_CASE("points over the half-degree field attains the Hasse-Weil bound") {
  const CliResult r = run_cli("points --p 3 --s 2 --degree 2");
  CHECK(r.exit_code == 0);
  const json j = parse(r);
  CHECK(j["degree"] == 2);
  CHECK(j["field_order"] == 9);
  CHECK(j["count"] == 16);
  CHECK(j["hasse_weil_bound"] == 16);
  CHECK(j["maximal"] == true);
}

TEST_CASE("points CSV lists affine coordinates in a stable order") {
  const CliResult r = run_cli("points --p 3 --s 2 --degree 2 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "x,y");
  REQUIRE(std::getline(in, line));
  CHECK(line == "0:0,0:0");
  REQUIRE(std::getline(in, line));
  CHECK(line == "0:0,0:1");
  REQUIRE(std::getline(in, line));
  CHECK(line == "0:0,0:2");
  std::int64_t data_rows = 3;
  while (std::getline(in, line)) ++data_rows;
  CHECK(data_rows == 15);  // 16 points minus the one at infinity
}

TEST_CASE("generalized Hermitian point checks match the tower expectation") {
  const CliResult hermitian = run_cli("points --ell 3 --r 1");
  CHECK(hermitian.exit_code == 0);
  const json h = parse(hermitian);
  CHECK(h["family"] == "generalized_hermitian");
  CHECK(h["count"] == 16);
  CHECK(h["maximal"] == true);

  const CliResult tall = run_cli("points --ell 3 --r 2");
  CHECK(tall.exit_code == 0);  // non-maximality is the expectation for r > 1
  const json t = parse(tall);
  CHECK(t["genus"] == 13);
  CHECK(t["count"] == 136);
  CHECK(t["hasse_weil_bound"] == 316);
  CHECK(t["maximal"] == false);
}

TEST_CASE("conjecture audit agrees on both routes") {
  const CliResult r = run_cli("conjecture --ell 3 --r 2");
  REQUIRE(r.exit_code == 0);
  const json j = parse(r);
  CHECK(j["genus"] == 13);
  CHECK(j["a_conjectured"] == 5);
  CHECK(j["a_computed"] == 5);
  CHECK(j["a_nabla"] == 5);
  CHECK(j["routes_agree"] == true);
  CHECK(j["agrees"] == true);
}

TEST_CASE("code report carries the bound chain and the exact distance") {
  const CliResult r = run_cli("code --p 3 --s 2 --m 2");
  CHECK(r.exit_code == 0);
  const json j = parse(r);
  CHECK(j["n"] == 63);
  CHECK(j["k"] == 2);
  CHECK(j["genus"] == 1);
  CHECK(j["a_number"] == 1);
  CHECK(j["improved_bound"] == 60);
  CHECK(j["goppa_bound"] == 61);
  CHECK(j["singleton_bound"] == 62);
  CHECK(j["exact_d"] == 61);
  CHECK(j["chain_ok"] == true);

  const CliResult guarded = run_cli("code --p 3 --s 2 --m 5");
  CHECK(guarded.exit_code == 0);
  const json g = parse(guarded);
  CHECK(g["k"] == 5);
  CHECK(g["exact_d"].is_null());
  CHECK(g["chain_ok"] == true);
}

TEST_CASE("code CSV emits the generator matrix") {
  const CliResult r = run_cli("code --p 3 --s 2 --m 5 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::int64_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(1 + std::count(line.begin(), line.end(), ',') == 63);
  }
  CHECK(rows == 5);
  CHECK(r.out.substr(0, 8) == "1:0:0:0,");
}

TEST_CASE("rank-table defaults to CSV with a blank cell past the matrix guard") {
  const CliResult r = run_cli("rank-table --p-max 7 --s-list 2,4");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "p,s,genus,rank_closed,a_closed,matrix_rank");
  std::int64_t rows = 0;
  bool saw_34 = false, saw_74 = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line == "3,4,16,8,8,8") saw_34 = true;
    if (line == "7,4,576,288,288,") saw_74 = true;  // blank: 7^8 > ambient guard
  }
  CHECK(rows == 6);
  CHECK(saw_34);
  CHECK(saw_74);
}

TEST_CASE("rank-table --format json mirrors the CSV content") {
  const CliResult r = run_cli("rank-table --p-max 3 --s-list 2 --format json");
  CHECK(r.exit_code == 0);
  const json j = parse(r);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["p"] == 3);
  CHECK(j[0]["s"] == 2);
  CHECK(j[0]["genus"] == 1);
  CHECK(j[0]["rank_closed"] == 0);
  CHECK(j[0]["a_closed"] == 1);
  CHECK(j[0]["matrix_rank"] == 0);
}

TEST_CASE("--output writes the same bytes to a file") {
  const std::filesystem::path path = temp_file("anumber");
  const std::string args = "anumber --p 5 --s 2 --method all";
  const CliResult direct = run_cli(args);
  const CliResult redirected =
      run_cli(args + " --output \"" + path.string() + "\"");
  REQUIRE(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  std::filesystem::remove(path);
}
