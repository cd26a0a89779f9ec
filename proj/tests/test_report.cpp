// Copyright 2026 The lazyroute developers
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

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lazyroute/report.hpp"

using namespace lazyroute;

TEST_CASE("overhead is a percentage of the input count") {
  CHECK(overhead_pct(10, 15) == doctest::Approx(50.0));
  CHECK(overhead_pct(4, 3) == doctest::Approx(-25.0));
  CHECK(overhead_pct(7, 7) == doctest::Approx(0.0));
  CHECK(overhead_pct(0, 12) == doctest::Approx(0.0));  // no input CNOTs
}

TEST_CASE("trackers serialize by kind") {
  nlohmann::json perm = tracker_json(Tracker(Permutation({2, 0, 1})));
  CHECK(perm["kind"] == "permutation");
  CHECK(perm["data"] == nlohmann::json({2, 0, 1}));

  LinearTable a(2);
  a.absorb_cnot(0, 1);
  nlohmann::json lin = tracker_json(Tracker(a));
  CHECK(lin["kind"] == "linear");
  CHECK(lin["data"] == nlohmann::json({"10", "11"}));

  CliffordTableau t(1);
  t.left_mul(Gate::h(0));
  nlohmann::json tab = tracker_json(Tracker(t));
  CHECK(tab["kind"] == "tableau");
  CHECK(tab["data"]["x_images"] == nlohmann::json({"+Z"}));
  CHECK(tab["data"]["z_images"] == nlohmann::json({"+X"}));
}

TEST_CASE("affine fixes serialize rows, offset, and diagonalizer size") {
  AffineFix fix;
  fix.diagonalizer = Circuit(2);
  fix.diagonalizer.append(Gate::h(0));
  fix.rows = {BitVec(2), BitVec(2)};
  fix.rows[0].set(0, true);
  fix.rows[0].set(1, true);
  fix.rows[1].set(0, true);
  fix.offset = BitVec(2);
  fix.offset.set(0, true);
  nlohmann::json j = affine_fix_json(fix);
  CHECK(j["rows"] == nlohmann::json({"11", "10"}));
  CHECK(j["offset"] == "10");
  CHECK(j["diagonalizer_gates"] == 1);
}

TEST_CASE("route reports carry the full field set") {
  RouteMetrics m;
  m.in_cnot = 5;
  m.out_cnot = 8;
  m.in_2q = 5;
  m.out_2q = 8;
  m.wall_ms = 1.25;
  nlohmann::json j = route_report(Method::Clifford, "lnn:4", 3, 4, m,
                                  Tracker(Permutation::identity(4)), std::nullopt);
  CHECK(j["method"] == "clifford");
  CHECK(j["arch"] == "lnn:4");
  CHECK(j["depth"] == 3);
  CHECK(j["n_qubits"] == 4);
  CHECK(j["in_cnot"] == 5);
  CHECK(j["out_cnot"] == 8);
  CHECK(j["in_2q"] == 5);
  CHECK(j["out_2q"] == 8);
  CHECK(j["overhead_pct"] == doctest::Approx(60.0));
  CHECK(j["wall_ms"] == doctest::Approx(1.25));
  CHECK(j["final_operator"]["kind"] == "permutation");
  CHECK(j["verified"].is_null());

  nlohmann::json ok = route_report(Method::Swap, "lnn:4", 1, 4, m,
                                   Tracker(Permutation::identity(4)), true);
  CHECK(ok["verified"] == true);
}

TEST_CASE("bench csv appends one mean row per method in first appearance order") {
  std::vector<BenchRow> rows = {
      {"swap", "lnn:6", 4, 10, 20, 100.0, 1.0},
      {"clifford+merge", "lnn:6", 3, 10, 12, 20.0, 2.0},
      {"swap", "lnn:6", 4, 10, 14, 40.0, 3.0},
  };
  std::istringstream csv(bench_csv(rows));
  std::vector<std::string> lines;
  for (std::string line; std::getline(csv, line);) lines.push_back(line);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "method,arch,depth,in_cnot,out_cnot,overhead_pct,wall_ms");
  CHECK(lines[1] == "swap,lnn:6,4,10,20,100,1");
  CHECK(lines[2] == "clifford+merge,lnn:6,3,10,12,20,2");
  CHECK(lines[3] == "swap,lnn:6,4,10,14,40,3");
  CHECK(lines[4] == "swap (mean),lnn:6,4,10,17,70,2");
  CHECK(lines[5] == "clifford+merge (mean),lnn:6,3,10,12,20,2");
}

TEST_CASE("bench json mirrors the csv aggregation") {
  std::vector<BenchRow> rows = {
      {"swap", "lnn:3", 4, 4, 6, 50.0, 1.0},
      {"swap", "lnn:3", 4, 4, 10, 150.0, 3.0},
  };
  nlohmann::json j = bench_json(rows);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][1]["out_cnot"] == 10);
  REQUIRE(j["means"].size() == 1);
  CHECK(j["means"][0]["method"] == "swap");
  CHECK(j["means"][0]["instances"] == 2);
  CHECK(j["means"][0]["mean_out_cnot"] == doctest::Approx(8.0));
  CHECK(j["means"][0]["mean_overhead_pct"] == doctest::Approx(100.0));
  CHECK(j["means"][0]["mean_wall_ms"] == doctest::Approx(2.0));
}
