// Copyright 2026 The qroute Authors
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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qroute/baselines.hpp"
#include "qroute/bench.hpp"
#include "qroute/generators.hpp"
#include "qroute/io.hpp"

namespace bench = qroute::bench;

namespace {

int run_bounds(const std::string &network, std::int64_t n, std::int64_t k) {
  qroute::BoundEstimate b;
  if (network == "linear") {
    b = qroute::linear_sn_bounds(n);
  } else if (network == "kreg") {
    b = qroute::kreg_sn_bounds(n, k);
  } else {
    b = qroute::grid_sn_bounds(n);
  }
  std::cout << "network,N,k,depth,swaps\n"
            << qroute::network_name(b.network) << ',' << n << ','
            << (network == "kreg" ? std::to_string(k) : "") << ',' << b.depth.str() << ','
            << b.swaps.str() << '\n';
  return bench::kOk;
}

int run_generate(const std::string &family, int n, double param, int side, std::uint64_t seed,
                 const std::string &out) {
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw qroute::Error("cannot write '" + out + "'");
  }
  std::ostream &os = out.empty() ? std::cout : file;
  if (family == "grid") {
    qroute::write_edge_list(os, qroute::square_grid(side));
  } else if (bench::parse_family(family) == bench::Family::KRegular) {
    qroute::write_edge_list(os, qroute::gen_k_regular(n, static_cast<int>(param), seed));
  } else {
    qroute::write_edge_list(os, qroute::gen_erdos_renyi(n, param, seed));
  }
  return bench::kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"qroute: QAOA qubit router for connectivity-constrained QPUs"};
  app.require_subcommand(1);

  // route
  bench::RouteFileOptions route_opt;
  std::string route_router = "greedy";
  bool route_no_pzs = false;
  auto *route_cmd = app.add_subcommand("route", "Route a problem graph onto a hardware graph");
  route_cmd->add_option("--problem", route_opt.problem, "Problem edge-list file")->required();
  route_cmd->add_option("--hardware", route_opt.hardware, "Hardware edge-list file")->required();
  route_cmd->add_option("--router", route_router, "greedy | linear-sn")
      ->check(CLI::IsMember({"greedy", "linear-sn"}));
  route_cmd->add_option("--out", route_opt.out, "Write circuit JSON here");
  route_cmd->add_option("--seed", route_opt.seed, "Router seed");
  route_cmd->add_flag("--no-paired-zero-swaps", route_no_pzs, "Disable paired 0/0 swaps");

  // sweep
  bench::SweepConfig sweep;
  std::string sweep_family = "k-regular";
  int sweep_k = 4;
  double sweep_p = 0.1;
  std::vector<int> sides;
  std::vector<std::string> routers{"greedy"};
  std::string sweep_out;
  std::string format = "csv";
  bool sweep_no_pzs = false;
  bool no_verify = false;
  auto *sweep_cmd = app.add_subcommand("sweep", "Benchmark sweep over random instances");
  sweep_cmd->add_option("--family", sweep_family, "k-regular | erdos-renyi")
      ->check(CLI::IsMember({"k-regular", "erdos-renyi"}));
  sweep_cmd->add_option("--k", sweep_k, "Degree for k-regular graphs");
  sweep_cmd->add_option("--p", sweep_p, "Edge probability for Erdos-Renyi graphs");
  sweep_cmd->add_option("--grid-sides", sides, "Grid side lengths L")->delimiter(',');
  sweep_cmd->add_option("--instances", sweep.instances, "Instances per grid side");
  sweep_cmd->add_option("--seed", sweep.base_seed, "Base seed; instance i uses seed + i");
  sweep_cmd->add_option("--router", routers, "greedy | linear-sn | bounds-only (comma list)")
      ->delimiter(',')
      ->check(CLI::IsMember({"greedy", "linear-sn", "bounds-only"}));
  sweep_cmd->add_option("--out", sweep_out, "Output file (default stdout)");
  sweep_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_flag("--no-paired-zero-swaps", sweep_no_pzs, "Disable paired 0/0 swaps");
  sweep_cmd->add_flag("--no-verify", no_verify, "Skip circuit verification");
  sweep_cmd->add_flag("--timing", sweep.timing, "Record runtime_ms (output no longer reproducible)");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (default QROUTE_THREADS)");

  // bounds
  std::string network = "linear";
  std::int64_t bound_n = 0;
  std::int64_t bound_k = 4;
  auto *bounds_cmd = app.add_subcommand("bounds", "Closed-form SWAP network depth and SWAP count");
  bounds_cmd->add_option("--network", network, "linear | kreg | grid")
      ->check(CLI::IsMember({"linear", "kreg", "grid"}));
  bounds_cmd->add_option("--n", bound_n, "Qubit count N")->required();
  bounds_cmd->add_option("--k", bound_k, "Problem graph degree (kreg)");

  // verify
  std::string vproblem, vhardware, vcircuit;
  auto *verify_cmd = app.add_subcommand("verify", "Check a circuit JSON against its instance");
  verify_cmd->add_option("--problem", vproblem, "Problem edge-list file")->required();
  verify_cmd->add_option("--hardware", vhardware, "Hardware edge-list file")->required();
  verify_cmd->add_option("--circuit", vcircuit, "Circuit JSON file")->required();

  // generate
  std::string gen_family = "k-regular";
  int gen_n = 9;
  double gen_param = 4;
  int gen_side = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto *gen_cmd = app.add_subcommand("generate", "Write a random problem graph or a grid QPU");
  gen_cmd->add_option("--family", gen_family, "k-regular | erdos-renyi | grid")
      ->check(CLI::IsMember({"k-regular", "erdos-renyi", "grid"}));
  gen_cmd->add_option("--n", gen_n, "Vertex count");
  gen_cmd->add_option("--param", gen_param, "k or p");
  gen_cmd->add_option("--side", gen_side, "Grid side length");
  gen_cmd->add_option("--seed", gen_seed, "Seed");
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? bench::kOk : bench::kUsage;
  }

  try {
    if (*route_cmd) {
      route_opt.router = bench::parse_router(route_router);
      route_opt.paired_zero_swaps = !route_no_pzs;
      return bench::route_file(route_opt, std::cout, std::cerr);
    }
    if (*sweep_cmd) {
      sweep.family = bench::parse_family(sweep_family);
      sweep.param = sweep.family == bench::Family::KRegular ? sweep_k : sweep_p;
      if (!sides.empty()) sweep.grid_sides = sides;
      sweep.routers.clear();
      for (const auto &r : routers) sweep.routers.push_back(bench::parse_router(r));
      sweep.paired_zero_swaps = !sweep_no_pzs;
      sweep.verify = !no_verify;
      try {
        bench::validate(sweep);
      } catch (const qroute::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return bench::kUsage;
      }
      const auto rows = bench::run_sweep(sweep);
      std::ofstream file;
      if (!sweep_out.empty()) {
        file.open(sweep_out);
        if (!file) throw qroute::Error("cannot write '" + sweep_out + "'");
      }
      std::ostream &os = sweep_out.empty() ? std::cout : file;
      if (format == "json") {
        bench::write_json(os, rows);
      } else {
        bench::write_csv(os, rows);
      }
      const int code = bench::sweep_exit_code(rows);
      if (code == bench::kVerifyFailed) std::cerr << "error: verification failed\n";
      if (code == bench::kRoutingError) std::cerr << "error: some instances failed to route\n";
      return code;
    }
    if (*bounds_cmd) return run_bounds(network, bound_n, bound_k);
    if (*verify_cmd) return bench::verify_file(vproblem, vhardware, vcircuit, std::cout, std::cerr);
    if (*gen_cmd) return run_generate(gen_family, gen_n, gen_param, gen_side, gen_seed, gen_out);
  } catch (const qroute::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return bench::kRoutingError;
  }
  return bench::kUsage;
}
