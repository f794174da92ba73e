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

#include <string>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/graph.hpp"

namespace qroute {

struct GateViolation {
  Gate gate;
  int layer = 0;
};

/// Outcome of replaying a routed circuit against its problem and hardware.
struct VerifyReport {
  bool ok = false;
  std::vector<Edge> executed_edges;  ///< distinct problem edges implemented
  std::vector<Edge> missing;         ///< problem edges never implemented
  std::vector<Edge> duplicated;      ///< problem edges implemented more than once
  std::vector<Edge> foreign;         ///< RZZ virtual pairs that are not problem edges
  std::vector<GateViolation> adjacency_violations;  ///< gates on non-coupled qubits
  std::vector<GateViolation> layer_violations;      ///< gates sharing a qubit within a layer
  bool mapping_mismatch = false;  ///< replayed final mapping differs, or mappings malformed

  [[nodiscard]] std::string to_json(int indent = -1) const;
};

/**
 * Replays `circuit` from `initial_mapping` (virtual -> physical), tracking
 * which virtual qubit sits on each physical one, and checks coupler
 * adjacency, per-layer disjointness, exactly-once execution of every problem
 * edge, and the recorded final mapping. Uses nothing but its arguments.
 */
VerifyReport verify(const RoutedCircuit &circuit, const ProblemGraph &pg, const HardwareGraph &hw,
                    const std::vector<Vertex> &initial_mapping);

/// Same, taking the initial mapping recorded in the circuit.
VerifyReport verify(const RoutedCircuit &circuit, const ProblemGraph &pg, const HardwareGraph &hw);

}  // namespace qroute
