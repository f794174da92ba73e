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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qroute/graph.hpp"

namespace qroute {

enum class GateKind { Rzz, Swap };

/// Two-qubit gate on physical qubits a != b.
struct Gate {
  GateKind kind = GateKind::Rzz;
  Vertex a = 0;
  Vertex b = 0;
  /// Rotation angle; absent means symbolic (the QAOA parameter).
  std::optional<double> angle;
  /// Problem edge implemented by an Rzz, in virtual qubits.
  std::optional<Edge> origin;

  static Gate rzz(Vertex a, Vertex b, std::optional<Edge> origin = std::nullopt) {
    return Gate{GateKind::Rzz, a, b, std::nullopt, origin};
  }
  static Gate swap(Vertex a, Vertex b) { return Gate{GateKind::Swap, a, b, {}, {}}; }

  [[nodiscard]] bool touches(Vertex q) const { return a == q || b == q; }
  [[nodiscard]] bool same_pair(const Gate &o) const {
    return make_edge(a, b) == make_edge(o.a, o.b);
  }
};

/// One time step. `occupant[q]` indexes into `gates`, or -1; `blocked[q]`
/// marks qubits a landed gate pins at this layer.
struct Layer {
  std::vector<Gate> gates;
  std::vector<int> occupant;
  std::vector<char> blocked;

  [[nodiscard]] bool is_free(Vertex q) const { return occupant[q] < 0 && !blocked[q]; }
};

struct CircuitMetrics {
  int depth = 0;
  int swap_count = 0;
  int rzz_count = 0;
  int layers = 0;
};

/**
 * Layered two-qubit circuit on physical qubits.
 *
 * append() implements push-back: a gate slides toward earlier layers while
 * both of its qubits are free in the layer before, so per-qubit gate order is
 * always preserved. A SWAP appended directly after an identical SWAP on the
 * same pair annihilates with it.
 */
class RoutedCircuit {
 public:
  RoutedCircuit() = default;
  explicit RoutedCircuit(int num_qubits) : num_qubits_(num_qubits) {}

  [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] const std::vector<Layer> &layers() const noexcept { return layers_; }

  /// Returns the landing layer, or -1 when the gate cancelled an earlier SWAP.
  /// Push-back stops at layer `floor`.
  int append(const Gate &gate, int floor = 0);

  /// Appends `gates` verbatim as a new layer, without push-back or checks.
  void push_layer(std::vector<Gate> gates);

  /// Removes back-to-back SWAP pairs on the same qubits; returns gates removed.
  int cancel_adjacent_swaps();

  /// Removes SWAPs that are the last gate on both of their qubits, repeatedly,
  /// and patches final_mapping to match. Returns gates removed.
  int drop_trailing_swaps();

  [[nodiscard]] CircuitMetrics metrics() const;

  /// Gates in time order (layer by layer).
  [[nodiscard]] std::vector<Gate> flatten() const;

  std::vector<Vertex> initial_mapping;  ///< virtual -> physical before the first layer
  std::vector<Vertex> final_mapping;    ///< virtual -> physical after the last layer

 private:
  Layer make_layer() const;
  void check_qubit(Vertex q) const;
  void rebuild_occupancy(Layer &layer) const;
  void trim();

  int num_qubits_ = 0;
  std::vector<Layer> layers_;
};

/// Stable circuit JSON: {n, initial_mapping, layers, final_mapping}; empty layers omitted.
std::string to_json(const RoutedCircuit &circuit, int indent = -1);
RoutedCircuit circuit_from_json(std::string_view text);

}  // namespace qroute
