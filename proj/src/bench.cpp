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

#include "qroute/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qroute/baselines.hpp"
#include "qroute/generators.hpp"
#include "qroute/io.hpp"
#include "qroute/router.hpp"
#include "qroute/verifier.hpp"

namespace qroute::bench {

const char *family_name(Family f) {
  return f == Family::KRegular ? "k-regular" : "erdos-renyi";
}

const char *router_name(RouterKind r) {
  switch (r) {
    case RouterKind::Greedy: return "greedy";
    case RouterKind::LinearSn: return "linear-sn";
    case RouterKind::BoundsOnly: return "bounds-only";
  }
  return "?";
}

Family parse_family(const std::string &s) {
  if (s == "k-regular" || s == "kreg" || s == "regular") return Family::KRegular;
  if (s == "erdos-renyi" || s == "er") return Family::ErdosRenyi;
  throw Error("unknown graph family '" + s + "'");
}

RouterKind parse_router(const std::string &s) {
  if (s == "greedy") return RouterKind::Greedy;
  if (s == "linear-sn") return RouterKind::LinearSn;
  if (s == "bounds-only") return RouterKind::BoundsOnly;
  throw Error("unknown router '" + s + "'");
}

void validate(const SweepConfig &cfg) {
  if (cfg.instances < 1) throw Error("sweep: instances must be at least 1");
  if (cfg.grid_sides.empty()) throw Error("sweep: no grid sides given");
  for (int side : cfg.grid_sides) {
    if (side < 2) throw Error("sweep: grid sides must be at least 2");
  }
  if (cfg.routers.empty()) throw Error("sweep: no router selected");
  if (cfg.family == Family::KRegular) {
    if (cfg.param < 0 || cfg.param != static_cast<int>(cfg.param)) {
      throw Error("sweep: k must be a nonnegative integer");
    }
  } else if (!(cfg.param >= 0.0 && cfg.param <= 1.0)) {
    throw Error("sweep: p must lie in [0, 1]");
  }
}

namespace {

std::string format_param(const SweepConfig &cfg) {
  if (cfg.family == Family::KRegular) return std::to_string(static_cast<int>(cfg.param));
  std::ostringstream ss;
  ss << cfg.param;
  return ss.str();
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("QROUTE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<SweepRow> bound_rows(const SweepConfig &cfg, int side) {
  const std::int64_t n = static_cast<std::int64_t>(side) * side;
  std::vector<BoundEstimate> bounds{linear_sn_bounds(n)};
  if (cfg.family == Family::KRegular && cfg.param >= 1) {
    bounds.push_back(kreg_sn_bounds(n, static_cast<std::int64_t>(cfg.param)));
  }
  bounds.push_back(grid_sn_bounds(n));

  std::vector<SweepRow> rows;
  for (const BoundEstimate &b : bounds) {
    SweepRow row;
    row.family = family_name(cfg.family);
    row.param = format_param(cfg);
    row.n = static_cast<int>(n);
    row.router = std::string("bound-") + network_name(b.network);
    row.depth = b.depth.str();
    row.swaps = b.swaps.str();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> instance_rows(const SweepConfig &cfg, int side, int instance) {
  const int n = side * side;
  const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(instance);
  SweepRow base;
  base.family = family_name(cfg.family);
  base.param = format_param(cfg);
  base.n = n;
  base.seed = seed;

  std::optional<ProblemGraph> pg;
  std::string gen_error;
  try {
    pg = cfg.family == Family::KRegular ? gen_k_regular(n, static_cast<int>(cfg.param), seed)
                                        : gen_erdos_renyi(n, cfg.param, seed);
    base.graph_hash = pg->fingerprint();
  } catch (const Error &e) {
    gen_error = e.what();
  }
  const HardwareGraph hw = square_grid(side);

  std::vector<SweepRow> rows;
  for (RouterKind kind : cfg.routers) {
    if (kind == RouterKind::BoundsOnly) continue;
    SweepRow row = base;
    row.router = router_name(kind);
    if (!pg) {
      row.error = gen_error;
      rows.push_back(std::move(row));
      continue;
    }
    try {
      const auto start = std::chrono::steady_clock::now();
      RoutedCircuit circuit;
      if (kind == RouterKind::Greedy) {
        RouterConfig rc;
        rc.seed = seed;
        rc.enable_paired_zero_swaps = cfg.paired_zero_swaps;
        circuit = route(*pg, hw, rc);
      } else {
        circuit = linear_sn_route(*pg, hw);
      }
      const auto stop = std::chrono::steady_clock::now();
      const CircuitMetrics m = circuit.metrics();
      row.depth = std::to_string(m.depth);
      row.swaps = std::to_string(m.swap_count);
      row.rzz = m.rzz_count;
      if (cfg.verify) row.verify_ok = verify(circuit, *pg, hw).ok;
      if (cfg.timing) {
        row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      }
    } catch (const Error &e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig &cfg) {
  validate(cfg);
  const bool want_bounds =
      std::find(cfg.routers.begin(), cfg.routers.end(), RouterKind::BoundsOnly) != cfg.routers.end();
  const bool want_instances =
      std::any_of(cfg.routers.begin(), cfg.routers.end(),
                  [](RouterKind r) { return r != RouterKind::BoundsOnly; });

  struct Job {
    int side;
    int instance;
  };
  std::vector<Job> jobs;
  if (want_instances) {
    for (int side : cfg.grid_sides)
      for (int i = 0; i < cfg.instances; ++i) jobs.push_back({side, i});
  }

  std::vector<std::vector<SweepRow>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      results[j] = instance_rows(cfg, jobs[j].side, jobs[j].instance);
    }
  };
  const int threads = std::min<int>(thread_count(cfg.threads), std::max<int>(1, jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();

  std::vector<SweepRow> rows;
  std::size_t j = 0;
  for (int side : cfg.grid_sides) {
    if (want_bounds) {
      auto b = bound_rows(cfg, side);
      rows.insert(rows.end(), b.begin(), b.end());
    }
    while (j < jobs.size() && jobs[j].side == side) {
      rows.insert(rows.end(), results[j].begin(), results[j].end());
      ++j;
    }
  }
  return rows;
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
  out << "family,param,N,seed,router,depth,swaps,rzz,verify_ok,runtime_ms,graph_hash,error\n";
  for (const SweepRow &r : rows) {
    out << r.family << ',' << r.param << ',' << r.n << ','
        << (r.seed ? std::to_string(*r.seed) : "") << ',' << r.router << ',' << r.depth << ','
        << r.swaps << ',' << (r.rzz ? std::to_string(*r.rzz) : "") << ','
        << (r.verify_ok ? (*r.verify_ok ? "true" : "false") : "") << ','
        << (r.runtime_ms ? ms(*r.runtime_ms) : "") << ','
        << (r.graph_hash ? hex64(*r.graph_hash) : "") << ',' << csv_field(r.error) << '\n';
  }
}

void write_json(std::ostream &out, const std::vector<SweepRow> &rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const SweepRow &r : rows) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["param"] = r.param;
    j["N"] = r.n;
    j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nullptr;
    j["router"] = r.router;
    j["depth"] = r.depth;
    j["swaps"] = r.swaps;
    j["rzz"] = r.rzz ? nlohmann::ordered_json(*r.rzz) : nullptr;
    j["verify_ok"] = r.verify_ok ? nlohmann::ordered_json(*r.verify_ok) : nullptr;
    j["runtime_ms"] = r.runtime_ms ? nlohmann::ordered_json(*r.runtime_ms) : nullptr;
    j["graph_hash"] = r.graph_hash ? nlohmann::ordered_json(hex64(*r.graph_hash)) : nullptr;
    j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

int sweep_exit_code(const std::vector<SweepRow> &rows) {
  int code = kOk;
  for (const SweepRow &r : rows) {
    if (!r.error.empty()) code = kRoutingError;
  }
  for (const SweepRow &r : rows) {
    if (r.verify_ok && !*r.verify_ok) code = kVerifyFailed;
  }
  return code;
}

int route_file(const RouteFileOptions &opt, std::ostream &out, std::ostream &err) {
  try {
    const ProblemGraph pg = read_problem_graph(opt.problem);
    const HardwareGraph hw = read_hardware_graph(opt.hardware);
    RoutedCircuit circuit;
    if (opt.router == RouterKind::Greedy) {
      RouterConfig rc;
      rc.seed = opt.seed;
      rc.enable_paired_zero_swaps = opt.paired_zero_swaps;
      circuit = route(pg, hw, rc);
    } else if (opt.router == RouterKind::LinearSn) {
      circuit = linear_sn_route(pg, hw);
    } else {
      err << "route: bounds-only does not produce a circuit\n";
      return kUsage;
    }
    const VerifyReport report = verify(circuit, pg, hw);
    if (!opt.out.empty()) {
      std::ofstream f(opt.out);
      if (!f) throw Error("cannot write '" + opt.out + "'");
      f << to_json(circuit, 2) << '\n';
    }
    const CircuitMetrics m = circuit.metrics();
    out << "router=" << router_name(opt.router) << " N=" << pg.num_vertices()
        << " depth=" << m.depth << " swaps=" << m.swap_count << " rzz=" << m.rzz_count
        << " verified=" << (report.ok ? "yes" : "no") << '\n';
    if (!report.ok) {
      err << "verification failed: " << report.to_json() << '\n';
      return kVerifyFailed;
    }
    return kOk;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kRoutingError;
  }
}

int verify_file(const std::string &problem, const std::string &hardware,
                const std::string &circuit_path, std::ostream &out, std::ostream &err) {
  try {
    const ProblemGraph pg = read_problem_graph(problem);
    const HardwareGraph hw = read_hardware_graph(hardware);
    std::ifstream f(circuit_path);
    if (!f) throw Error("cannot open '" + circuit_path + "'");
    std::stringstream text;
    text << f.rdbuf();
    const RoutedCircuit circuit = circuit_from_json(text.str());
    const VerifyReport report = verify(circuit, pg, hw);
    out << report.to_json(2) << '\n';
    return report.ok ? kOk : kVerifyFailed;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kRoutingError;
  }
}

}  // namespace qroute::bench
