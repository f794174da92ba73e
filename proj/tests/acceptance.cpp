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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qroute/baselines.hpp"
#include "qroute/bench.hpp"
#include "qroute/coloring.hpp"
#include "qroute/distance.hpp"
#include "qroute/generators.hpp"
#include "qroute/router.hpp"
#include "qroute/verifier.hpp"

namespace {

using namespace qroute;
using bench::RouterKind;
using bench::SweepConfig;
using bench::SweepRow;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char *format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<SweepRow> rows_for(const std::vector<SweepRow> &rows, const std::string &router) {
  std::vector<SweepRow> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [&](const SweepRow &r) { return r.router == router; });
  return out;
}

double mean_of(const std::vector<SweepRow> &rows, std::string SweepRow::*field) {
  double sum = 0;
  for (const auto &r : rows) sum += std::stod(r.*field);
  return rows.empty() ? 0 : sum / static_cast<double>(rows.size());
}

Outcome correctness_sweep() {
  const auto start = std::chrono::steady_clock::now();
  int clean = 0, total = 0;
  struct Family {
    bench::Family family;
    double param;
  };
  const Family families[] = {{bench::Family::KRegular, 4},
                             {bench::Family::KRegular, 6},
                             {bench::Family::ErdosRenyi, 0.1},
                             {bench::Family::ErdosRenyi, 0.3}};
  for (const auto &f : families) {
    SweepConfig cfg;
    cfg.family = f.family;
    cfg.param = f.param;
    cfg.grid_sides = {3, 4, 5};
    cfg.instances = 20;
    cfg.routers = {RouterKind::Greedy, RouterKind::LinearSn};
    for (const auto &row : bench::run_sweep(cfg)) {
      ++total;
      if (row.error.empty() && row.verify_ok == true) ++clean;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {clean == total && total == 480 && secs < 120.0,
          fmt("%d/%d routed circuits verifier-clean (need all 480), %.1f s (limit 120 s)", clean,
              total, secs)};
}

Outcome formula_fidelity() {
  struct Expect {
    const char *name;
    BoundEstimate got;
    Rational depth, swaps;
  };
  const Expect cases[] = {
      {"linear(400)", linear_sn_bounds(400), Rational(798), Rational(79401)},
      {"kreg(400,4)", kreg_sn_bounds(400, 4), Rational(176), Rational(30780)},
      {"grid(400)", grid_sn_bounds(400), Rational(1323, 2), Rational(39690)},
      {"grid(25)", grid_sn_bounds(25), Rational(90), Rational(135)},
  };
  bool ok = true;
  std::string detail;
  for (const auto &c : cases) {
    const bool hit = c.got.depth == c.depth && c.got.swaps == c.swaps;
    ok = ok && hit;
    if (!detail.empty()) detail += "; ";
    detail += std::string(c.name) + " = (" + c.got.depth.str() + ", " + c.got.swaps.str() + ")";
    if (!hit) detail += " expected (" + c.depth.str() + ", " + c.swaps.str() + ")";
  }
  return {ok, detail + " [exact]"};
}

Outcome small_grid_reproduction() {
  SweepConfig cfg;
  cfg.grid_sides = {3};
  cfg.instances = 50;
  const auto rows = rows_for(bench::run_sweep(cfg), "greedy");
  std::vector<int> swaps;
  int hits = 0;
  int best_swaps = -1, best_depth = -1;
  for (const auto &r : rows) {
    if (!r.error.empty()) continue;
    const int s = std::stoi(r.swaps), d = std::stoi(r.depth);
    swaps.push_back(s);
    if (s <= 6 && d <= 7) ++hits;
    if (best_swaps < 0 || std::make_pair(s + d, s) < std::make_pair(best_swaps + best_depth, best_swaps)) {
      best_swaps = s;
      best_depth = d;
    }
  }
  std::sort(swaps.begin(), swaps.end());
  const double median =
      swaps.empty() ? 1e9 : (swaps[(swaps.size() - 1) / 2] + swaps[swaps.size() / 2]) / 2.0;
  return {swaps.size() == 50 && hits >= 1 && median <= 12,
          fmt("%d/50 instances with swaps <= 6 and depth <= 7 (need >= 1; best swaps=%d depth=%d), "
              "median swaps %.1f (need <= 12)",
              hits, best_swaps, best_depth, median)};
}

Outcome sparse_superiority() {
  SweepConfig cfg;
  cfg.grid_sides = {5};
  cfg.instances = 20;
  cfg.routers = {RouterKind::Greedy, RouterKind::LinearSn};
  const auto rows = bench::run_sweep(cfg);
  const auto greedy = rows_for(rows, "greedy");
  const auto linear = rows_for(rows, "linear-sn");
  const double gs = mean_of(greedy, &SweepRow::swaps);
  const double ls = mean_of(linear, &SweepRow::swaps);
  const double gd = mean_of(greedy, &SweepRow::depth);
  return {greedy.size() == 20 && linear.size() == 20 && gs < ls && gd < 48.0,
          fmt("mean swaps greedy %.2f vs linear-sn %.2f (need <), mean greedy depth %.2f (need < 48)",
              gs, ls, gd)};
}

Outcome coloring_guarantee() {
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 5 + static_cast<int>((seed * 37) % 46);
    ProblemGraph g;
    if (seed % 2 == 0) {
      int k = 2 + static_cast<int>(seed % 9);
      k = std::min(k, n - 1);
      if ((n * k) % 2) --k;
      g = gen_k_regular(n, k, seed);
    } else {
      g = gen_erdos_renyi(n, 0.05 + 0.005 * static_cast<double>(seed), seed);
    }
    const auto col = edge_coloring(g);
    if (is_proper_coloring(g, col) && col.num_colors <= g.max_degree() + 1) ++good;
  }
  return {good == 100, fmt("%d/100 colorings proper with <= max degree + 1 colors", good)};
}

Outcome two_free_layers() {
  int instances = 0, clean = 0;
  for (std::uint64_t seed = 0; instances < 20 && seed < 5000; ++seed) {
    const int side = 3 + static_cast<int>(seed % 3);
    const auto pg = gen_k_regular(side * side, 4, seed);
    const auto hw = square_grid(side);
    if (!place(pg, hw).chain.leftover.empty()) continue;
    ++instances;
    const auto c = route(pg, hw);
    int seen = 0;
    bool swap_free = true;
    for (const Layer &layer : c.layers()) {
      if (layer.gates.empty()) continue;
      for (const Gate &g : layer.gates) swap_free = swap_free && g.kind == GateKind::Rzz;
      if (++seen == 2) break;
    }
    if (swap_free) ++clean;
  }
  return {instances == 20 && clean == 20,
          fmt("%d/%d empty-leftover 4-regular instances with no SWAP in the first two layers "
              "(need 20/20)",
              clean, instances)};
}

Outcome monotone_distance() {
  long events = 0, bad = 0;
  int runs = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int side = 3 + static_cast<int>(seed % 4);
    const auto pg = seed % 2 ? gen_erdos_renyi(side * side, 0.3, seed)
                             : gen_k_regular(side * side, 4, seed);
    const auto hw = square_grid(side);
    RouterConfig cfg;
    cfg.check_invariants = true;
    cfg.on_swap = [&](const SwapEvent &e) {
      ++events;
      const bool increases = e.distance_after > e.distance_before;
      const bool matched_flat =
          e.source == SwapSource::Matched && e.distance_after >= e.distance_before;
      if (increases || matched_flat) ++bad;
    };
    route(pg, hw, cfg);
    ++runs;
  }
  return {bad == 0 && events > 0,
          fmt("%ld swap events over %d instrumented runs, %ld violations (need 0)", events, runs,
              bad)};
}

Outcome determinism() {
  SweepConfig cfg;
  cfg.grid_sides = {3, 4, 5};
  cfg.instances = 10;
  cfg.routers = {RouterKind::Greedy, RouterKind::LinearSn, RouterKind::BoundsOnly};
  auto render = [&] {
    std::ostringstream out;
    bench::write_csv(out, bench::run_sweep(cfg));
    return out.str();
  };
  const auto a = render();
  const auto b = render();
  return {a == b && !a.empty(), fmt("two sweeps: %zu and %zu bytes, %s", a.size(), b.size(),
                                    a == b ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::pair<const char *, std::function<Outcome()>> criteria[] = {
      {"correctness sweep", correctness_sweep},
      {"formula fidelity", formula_fidelity},
      {"3x3 grid reproduction", small_grid_reproduction},
      {"sparse-regime superiority", sparse_superiority},
      {"coloring guarantee", coloring_guarantee},
      {"two swap-free layers", two_free_layers},
      {"monotone distance", monotone_distance},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto &[name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception &e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %d %s: %s: %s\n", index, o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
