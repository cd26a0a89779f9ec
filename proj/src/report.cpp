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

#include "lazyroute/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>

#include "lazyroute/tableau.hpp"

namespace lazyroute {

namespace {

std::string bits_string(const BitVec& v) {
  std::string s(v.size(), '0');
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) s[i] = '1';
  return s;
}

struct MeanAccumulator {
  std::size_t count = 0;
  double in_cnot = 0.0;
  double out_cnot = 0.0;
  double overhead_pct = 0.0;
  double wall_ms = 0.0;
};

}  // namespace

double overhead_pct(std::uint64_t in_cnot, std::uint64_t out_cnot) {
  if (in_cnot == 0) return 0.0;
  return 100.0 * (static_cast<double>(out_cnot) - static_cast<double>(in_cnot)) /
         static_cast<double>(in_cnot);
}

nlohmann::json tracker_json(const Tracker& h) {
  nlohmann::json out;
  out["kind"] = tracker_kind_name(h);
  if (const auto* sigma = std::get_if<Permutation>(&h)) {
    out["data"] = sigma->images();
  } else if (const auto* table = std::get_if<LinearTable>(&h)) {
    out["data"] = table->row_strings();
  } else {
    const auto& t = std::get<CliffordTableau>(h);
    nlohmann::json x = nlohmann::json::array();
    nlohmann::json z = nlohmann::json::array();
    for (std::uint32_t q = 0; q < t.size(); ++q) {
      x.push_back(t.image_x(q).str());
      z.push_back(t.image_z(q).str());
    }
    out["data"] = {{"x_images", x}, {"z_images", z}};
  }
  return out;
}

nlohmann::json affine_fix_json(const AffineFix& fix) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BitVec& row : fix.rows) rows.push_back(bits_string(row));
  return {{"rows", rows},
          {"offset", bits_string(fix.offset)},
          {"diagonalizer_gates", fix.diagonalizer.size()}};
}

nlohmann::json route_report(Method method, const std::string& arch, std::uint32_t depth,
                            std::uint32_t n_qubits, const RouteMetrics& metrics,
                            const Tracker& final_operator, std::optional<bool> verified) {
  nlohmann::json out;
  out["method"] = method_name(method);
  out["arch"] = arch;
  out["depth"] = depth;
  out["n_qubits"] = n_qubits;
  out["in_cnot"] = metrics.in_cnot;
  out["out_cnot"] = metrics.out_cnot;
  out["in_2q"] = metrics.in_2q;
  out["out_2q"] = metrics.out_2q;
  out["overhead_pct"] = overhead_pct(metrics.in_cnot, metrics.out_cnot);
  out["wall_ms"] = metrics.wall_ms;
  out["final_operator"] = tracker_json(final_operator);
  if (verified)
    out["verified"] = *verified;
  else
    out["verified"] = nullptr;
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "method,arch,depth,in_cnot,out_cnot,overhead_pct,wall_ms\n";
  std::vector<std::string> order;
  std::map<std::string, MeanAccumulator> means;
  for (const BenchRow& r : rows) {
    out << r.method << ',' << r.arch << ',' << r.depth << ',' << r.in_cnot << ',' << r.out_cnot
        << ',' << r.overhead_pct << ',' << r.wall_ms << '\n';
    if (!means.count(r.method)) order.push_back(r.method);
    MeanAccumulator& acc = means[r.method];
    ++acc.count;
    acc.in_cnot += static_cast<double>(r.in_cnot);
    acc.out_cnot += static_cast<double>(r.out_cnot);
    acc.overhead_pct += r.overhead_pct;
    acc.wall_ms += r.wall_ms;
  }
  for (const std::string& method : order) {
    const MeanAccumulator& acc = means[method];
    const double n = static_cast<double>(acc.count);
    const BenchRow& first = *std::find_if(rows.begin(), rows.end(),
                                          [&](const BenchRow& r) { return r.method == method; });
    out << method << " (mean)," << first.arch << ',' << first.depth << ',' << (acc.in_cnot / n)
        << ',' << (acc.out_cnot / n) << ',' << (acc.overhead_pct / n) << ',' << (acc.wall_ms / n)
        << '\n';
  }
  return out.str();
}

nlohmann::json bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json out;
  out["rows"] = nlohmann::json::array();
  std::vector<std::string> order;
  std::map<std::string, MeanAccumulator> means;
  for (const BenchRow& r : rows) {
    out["rows"].push_back({{"method", r.method},
                           {"arch", r.arch},
                           {"depth", r.depth},
                           {"in_cnot", r.in_cnot},
                           {"out_cnot", r.out_cnot},
                           {"overhead_pct", r.overhead_pct},
                           {"wall_ms", r.wall_ms}});
    if (!means.count(r.method)) order.push_back(r.method);
    MeanAccumulator& acc = means[r.method];
    ++acc.count;
    acc.in_cnot += static_cast<double>(r.in_cnot);
    acc.out_cnot += static_cast<double>(r.out_cnot);
    acc.overhead_pct += r.overhead_pct;
    acc.wall_ms += r.wall_ms;
  }
  out["means"] = nlohmann::json::array();
  for (const std::string& method : order) {
    const MeanAccumulator& acc = means[method];
    const double n = static_cast<double>(acc.count);
    out["means"].push_back({{"method", method},
                            {"instances", acc.count},
                            {"mean_in_cnot", acc.in_cnot / n},
                            {"mean_out_cnot", acc.out_cnot / n},
                            {"mean_overhead_pct", acc.overhead_pct / n},
                            {"mean_wall_ms", acc.wall_ms / n}});
  }
  return out;
}

}  // namespace lazyroute
