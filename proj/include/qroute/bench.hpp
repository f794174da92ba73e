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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qroute/graph.hpp"

namespace qroute::bench {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerifyFailed = 2,
  kRoutingError = 3,
};

enum class Family { KRegular, ErdosRenyi };
enum class RouterKind { Greedy, LinearSn, BoundsOnly };

const char *family_name(Family f);
const char *router_name(RouterKind r);
Family parse_family(const std::string &s);
RouterKind parse_router(const std::string &s);

struct SweepConfig {
  Family family = Family::KRegular;
  double param = 4;  ///< k for k-regular, p for Erdos-Renyi
  std::vector<int> grid_sides{5};
  int instances = 20;
  std::uint64_t base_seed = 0;
  std::vector<RouterKind> routers{RouterKind::Greedy};
  bool verify = true;
  bool paired_zero_swaps = true;
  /// Fill runtime_ms. Off by default so repeated sweeps are byte-identical.
  bool timing = false;
  /// Worker threads; 0 reads QROUTE_THREADS, else hardware concurrency.
  int threads = 0;
};

/// Throws Error on invalid parameters.
void validate(const SweepConfig &cfg);

struct SweepRow {
  std::string family;
  std::string param;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string router;
  std::string depth;
  std::string swaps;
  std::optional<int> rzz;
  std::optional<bool> verify_ok;
  std::optional<double> runtime_ms;
  std::optional<std::uint64_t> graph_hash;
  std::string error;
};

/// Instance i on every grid side uses seed base_seed + i, for every router.
/// Rows are ordered by (grid side, instance, router).
std::vector<SweepRow> run_sweep(const SweepConfig &cfg);

/// family,param,N,seed,router,depth,swaps,rzz,verify_ok,runtime_ms,graph_hash,error
void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);
void write_json(std::ostream &out, const std::vector<SweepRow> &rows);

/// kOk, or kVerifyFailed / kRoutingError if any row reports one.
int sweep_exit_code(const std::vector<SweepRow> &rows);

struct RouteFileOptions {
  std::string problem;
  std::string hardware;
  RouterKind router = RouterKind::Greedy;
  std::string out;  ///< circuit JSON path; empty writes nothing
  std::uint64_t seed = 0;
  bool paired_zero_swaps = true;
};

/// Routes one instance from edge-list files; prints a metrics line to `out`.
int route_file(const RouteFileOptions &opt, std::ostream &out, std::ostream &err);

/// Verifies a circuit JSON against edge-list files; prints the report to `out`.
int verify_file(const std::string &problem, const std::string &hardware,
                const std::string &circuit, std::ostream &out, std::ostream &err);

}  // namespace qroute::bench
