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

#include "qroute/verifier.hpp"

#include <algorithm>

#include "json.hpp"

namespace qroute {
namespace {

bool is_permutation_of_range(const std::vector<Vertex> &v2p, int n) {
  if (static_cast<int>(v2p.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex p : v2p) {
    if (p < 0 || p >= n || hit[p]) return false;
    hit[p] = 1;
  }
  return true;
}

nlohmann::ordered_json edges_json(const std::vector<Edge> &edges) {
  auto out = nlohmann::ordered_json::array();
  for (const Edge &e : edges) out.push_back({e.u, e.v});
  return out;
}

nlohmann::ordered_json violations_json(const std::vector<GateViolation> &vs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto &v : vs) {
    nlohmann::ordered_json j;
    j["layer"] = v.layer;
    j["kind"] = v.gate.kind == GateKind::Swap ? "SWAP" : "RZZ";
    j["qubits"] = {v.gate.a, v.gate.b};
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

std::string VerifyReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["ok"] = ok;
  j["executed"] = executed_edges.size();
  j["missing"] = edges_json(missing);
  j["duplicated"] = edges_json(duplicated);
  j["foreign"] = edges_json(foreign);
  j["adjacency_violations"] = violations_json(adjacency_violations);
  j["layer_violations"] = violations_json(layer_violations);
  j["mapping_mismatch"] = mapping_mismatch;
  return j.dump(indent);
}

VerifyReport verify(const RoutedCircuit &circuit, const ProblemGraph &pg, const HardwareGraph &hw,
                    const std::vector<Vertex> &initial_mapping) {
  VerifyReport report;
  const int n = circuit.num_qubits();
  if (pg.num_vertices() != n || hw.num_vertices() != n ||
      !is_permutation_of_range(initial_mapping, n)) {
    report.mapping_mismatch = true;
    report.missing = pg.edges();
    return report;
  }

  std::vector<Vertex> p2v(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) p2v[initial_mapping[v]] = v;

  std::vector<int> times(static_cast<std::size_t>(pg.num_edges()), 0);
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  const auto &layers = circuit.layers();
  for (int l = 0; l < static_cast<int>(layers.size()); ++l) {
    for (const Gate &g : layers[l].gates) {
      const bool in_range = g.a >= 0 && g.b >= 0 && g.a < n && g.b < n && g.a != g.b;
      if (!in_range || !hw.is_coupler(g.a, g.b)) {
        report.adjacency_violations.push_back({g, l});
        if (!in_range) continue;
      }
      if (stamp[g.a] == l || stamp[g.b] == l) report.layer_violations.push_back({g, l});
      stamp[g.a] = l;
      stamp[g.b] = l;

      if (g.kind == GateKind::Swap) {
        std::swap(p2v[g.a], p2v[g.b]);
        continue;
      }
      const Vertex x = p2v[g.a];
      const Vertex y = p2v[g.b];
      if (const auto id = pg.edge_id(x, y)) {
        ++times[*id];
      } else {
        report.foreign.push_back(make_edge(x, y));
      }
    }
  }

  for (EdgeId id = 0; id < pg.num_edges(); ++id) {
    if (times[id] >= 1) report.executed_edges.push_back(pg.edge(id));
    if (times[id] == 0) report.missing.push_back(pg.edge(id));
    if (times[id] > 1) report.duplicated.push_back(pg.edge(id));
  }

  std::vector<Vertex> final_v2p(static_cast<std::size_t>(n));
  for (Vertex p = 0; p < n; ++p) final_v2p[p2v[p]] = p;
  report.mapping_mismatch = final_v2p != circuit.final_mapping;

  report.ok = report.missing.empty() && report.duplicated.empty() && report.foreign.empty() &&
              report.adjacency_violations.empty() && report.layer_violations.empty() &&
              !report.mapping_mismatch;
  return report;
}

VerifyReport verify(const RoutedCircuit &circuit, const ProblemGraph &pg, const HardwareGraph &hw) {
  return verify(circuit, pg, hw, circuit.initial_mapping);
}

}  // namespace qroute
