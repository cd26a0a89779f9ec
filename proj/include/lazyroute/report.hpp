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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lazyroute/finalize.hpp"
#include "lazyroute/router.hpp"

namespace lazyroute {

/** 100 * (out - in) / in, or 0 when the input had no CNOTs. */
double overhead_pct(std::uint64_t in_cnot, std::uint64_t out_cnot);

/** {kind: "permutation"|"linear"|"tableau", data: ...}. Permutations store
 *  their image list, linear tables their row bitstrings, tableaus the
 *  signed Pauli images of each X_q and Z_q. */
nlohmann::json tracker_json(const Tracker& h);

/** Row bitstrings for L plus a bitstring for b, and the diagonalizer size. */
nlohmann::json affine_fix_json(const AffineFix& fix);

/** The per-job route report. `verified` is null when verification was
 *  skipped (width over the dense cap or not requested). */
nlohmann::json route_report(Method method, const std::string& arch, std::uint32_t depth,
                            std::uint32_t n_qubits, const RouteMetrics& metrics,
                            const Tracker& final_operator, std::optional<bool> verified);

/** One benchmark instance. */
struct BenchRow {
  std::string method;
  std::string arch;
  std::uint32_t depth = 0;
  std::uint64_t in_cnot = 0;
  std::uint64_t out_cnot = 0;
  double overhead_pct = 0.0;
  double wall_ms = 0.0;
};

/** Instance rows in input order, then one mean row per method token. */
std::string bench_csv(const std::vector<BenchRow>& rows);

/** {rows: [...], means: [...]} with the same aggregation as the CSV. */
nlohmann::json bench_json(const std::vector<BenchRow>& rows);

}  // namespace lazyroute
