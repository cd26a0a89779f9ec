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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lazyroute/coupling_graph.hpp"
#include "lazyroute/generators.hpp"
#include "lazyroute/qasm.hpp"
#include "lazyroute/report.hpp"
#include "lazyroute/router.hpp"
#include "lazyroute/verify.hpp"

namespace {

using namespace lazyroute;

struct MethodToken {
  std::string token;
  Method method = Method::Swap;
  bool merge = false;
  bool reorder = false;
};

MethodToken parse_method_token(const std::string& token) {
  MethodToken out;
  out.token = token;
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= token.size()) {
    const std::size_t plus = token.find('+', start);
    if (plus == std::string::npos) {
      parts.push_back(token.substr(start));
      break;
    }
    parts.push_back(token.substr(start, plus - start));
    start = plus + 1;
  }
  detail::require(!parts.empty() && !parts[0].empty(), "empty method token");
  out.method = parse_method(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] == "merge")
      out.merge = true;
    else if (parts[i] == "reorder")
      out.reorder = true;
    else
      detail::fail("unknown method modifier '+" + parts[i] + "' (expected +merge or +reorder)");
  }
  detail::require(out.method == Method::Clifford || (!out.merge && !out.reorder),
                  "+merge/+reorder apply to the clifford method only");
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  detail::require(out.good(), "cannot open '" + path + "' for writing");
  out << content;
  detail::require(out.good(), "write to '" + path + "' failed");
}

struct RouteArgs {
  std::string in_path;
  std::string arch;
  std::string method;
  std::optional<std::uint32_t> depth;
  bool merge = false;
  bool reorder = false;
  std::string out_path;
  std::string report_path;
  bool verify = false;
};

int run_route(const RouteArgs& args) {
  const CouplingGraph g = CouplingGraph::preset(args.arch);
  const Circuit c = parse_qasm_file(args.in_path);
  const Method method = parse_method(args.method);
  if ((args.merge || args.reorder) && method != Method::Clifford) {
    std::cerr << "error: --merge/--reorder apply to --method clifford only\n";
    return 2;
  }

  RouteOptions opts;
  opts.method = method;
  opts.depth = args.depth;
  opts.merge = args.merge;
  opts.reorder = args.reorder;
  const RoutedOutput routed = route(c, g, opts);
  write_file(args.out_path, emit_qasm(routed.circuit));

  std::optional<bool> verified;
  if (args.verify && g.n_vertices() <= dense_qubit_cap())
    verified = equivalent_up_to(routed.final_operator, c.padded(g.n_vertices()), routed.circuit);

  const std::uint32_t depth = args.depth ? *args.depth : default_depth(method);
  if (!args.report_path.empty()) {
    const nlohmann::json report = route_report(method, args.arch, depth, g.n_vertices(),
                                               routed.metrics, routed.final_operator, verified);
    write_file(args.report_path, report.dump(2) + "\n");
  }

  std::cout << method_name(method) << " on " << args.arch << ": in_cnot="
            << routed.metrics.in_cnot << " out_cnot=" << routed.metrics.out_cnot
            << " overhead_pct=" << overhead_pct(routed.metrics.in_cnot, routed.metrics.out_cnot);
  if (verified) std::cout << " verified=" << (*verified ? "true" : "false");
  std::cout << "\n";

  if (verified && !*verified) {
    std::cerr << "error: routed circuit failed equivalence verification\n";
    return 3;
  }
  return 0;
}

struct BenchArgs {
  std::string arch;
  std::vector<std::string> methods;
  std::optional<std::uint32_t> depth;
  std::string gen;
  std::uint32_t n = 0;
  std::uint32_t k = 2;
  std::uint32_t count = 0;
  std::uint32_t seeds = 1;
  std::uint64_t seed_base = 1;
  std::string dir;
  std::string csv_path;
  std::string json_path;
};

int run_bench(const BenchArgs& args) {
  const CouplingGraph g = CouplingGraph::preset(args.arch);
  std::vector<MethodToken> tokens;
  for (const std::string& m : args.methods) tokens.push_back(parse_method_token(m));
  detail::require(!tokens.empty(), "at least one --method is required");
  detail::require(args.gen.empty() != args.dir.empty(),
                  "exactly one of --gen and --dir must be given");

  std::vector<Circuit> instances;
  if (!args.dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(args.dir))
      if (entry.is_regular_file() && entry.path().extension() == ".qasm")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    detail::require(!files.empty(), "no .qasm files in '" + args.dir + "'");
    for (const auto& f : files) instances.push_back(parse_qasm_file(f.string()));
  } else {
    detail::require(args.n >= 1, "--n is required with --gen");
    for (std::uint32_t s = 0; s < args.seeds; ++s) {
      const std::uint64_t seed = args.seed_base + s;
      if (args.gen == "qaoa") {
        instances.push_back(gen_qaoa_maxklin2(args.n, args.k, seed));
      } else if (args.gen == "pauli") {
        const std::uint32_t count = args.count ? args.count : args.n;
        instances.push_back(gen_random_pauli_seq(args.n, count, seed));
      } else {
        detail::fail("unknown generator '" + args.gen + "' (expected qaoa or pauli)");
      }
    }
  }

  std::vector<BenchRow> rows;
  rows.reserve(instances.size() * tokens.size());
  for (const Circuit& c : instances) {
    for (const MethodToken& tok : tokens) {
      RouteOptions opts;
      opts.method = tok.method;
      opts.depth = args.depth;
      opts.merge = tok.merge;
      opts.reorder = tok.reorder;
      const RoutedOutput routed = route(c, g, opts);
      BenchRow row;
      row.method = tok.token;
      row.arch = args.arch;
      row.depth = args.depth ? *args.depth : default_depth(tok.method);
      row.in_cnot = routed.metrics.in_cnot;
      row.out_cnot = routed.metrics.out_cnot;
      row.overhead_pct = overhead_pct(row.in_cnot, row.out_cnot);
      row.wall_ms = routed.metrics.wall_ms;
      rows.push_back(std::move(row));
    }
  }

  const std::string csv = bench_csv(rows);
  if (args.csv_path.empty())
    std::cout << csv;
  else
    write_file(args.csv_path, csv);
  if (!args.json_path.empty()) write_file(args.json_path, bench_json(rows).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lazyroute: coupling-graph circuit routing with lazy operator tracking"};
  app.require_subcommand(1);
  int exit_code = 0;

  RouteArgs route_args;
  std::uint32_t route_depth = 0;
  CLI::App* route_cmd = app.add_subcommand("route", "Route one QASM circuit");
  route_cmd->add_option("--in", route_args.in_path, "input QASM file")->required();
  route_cmd->add_option("--arch", route_args.arch,
                        "coupling graph preset or file:<path>")->required();
  route_cmd->add_option("--method", route_args.method, "swap, linear, or clifford")->required();
  CLI::Option* route_depth_opt =
      route_cmd->add_option("--depth", route_depth, "lookahead depth (default per method)");
  route_cmd->add_flag("--merge", route_args.merge, "merge same-axis rotations (clifford only)");
  route_cmd->add_flag("--reorder", route_args.reorder,
                      "reorder commuting rotations by tree cost (clifford only)");
  route_cmd->add_option("--out", route_args.out_path, "output QASM file")->required();
  route_cmd->add_option("--report", route_args.report_path, "write a JSON report here");
  route_cmd->add_flag("--verify", route_args.verify,
                      "densely verify the result when the width fits the cap");
  route_cmd->callback([&] {
    if (route_depth_opt->count() > 0) route_args.depth = route_depth;
    try {
      exit_code = run_route(route_args);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 1;
    }
  });

  BenchArgs bench_args;
  std::uint32_t bench_depth = 0;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Route a batch and summarize CNOT overheads");
  bench_cmd->add_option("--arch", bench_args.arch, "coupling graph preset or file:<path>")
      ->required();
  bench_cmd
      ->add_option("--method", bench_args.methods,
                   "method token, repeatable; optional +merge/+reorder suffixes "
                   "(e.g. clifford+reorder)")
      ->required();
  CLI::Option* bench_depth_opt =
      bench_cmd->add_option("--depth", bench_depth, "lookahead depth for every method");
  bench_cmd->add_option("--gen", bench_args.gen, "instance generator: qaoa or pauli");
  bench_cmd->add_option("--n", bench_args.n, "generator register width");
  bench_cmd->add_option("--k", bench_args.k, "qaoa parity weight (default 2)");
  bench_cmd->add_option("--count", bench_args.count, "pauli rotation count (default n)");
  bench_cmd->add_option("--seeds", bench_args.seeds, "number of seeded instances (default 1)");
  bench_cmd->add_option("--seed-base", bench_args.seed_base, "first seed value (default 1)");
  bench_cmd->add_option("--dir", bench_args.dir, "directory of .qasm instances instead of --gen");
  bench_cmd->add_option("--csv", bench_args.csv_path, "write CSV here instead of stdout");
  bench_cmd->add_option("--json", bench_args.json_path, "also write a JSON summary here");
  bench_cmd->callback([&] {
    if (bench_depth_opt->count() > 0) bench_args.depth = bench_depth;
    try {
      exit_code = run_bench(bench_args);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 1;
    }
  });

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
