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

#include "qroute/circuit.hpp"

#include <algorithm>

#include "json.hpp"

namespace qroute {

Layer RoutedCircuit::make_layer() const {
  Layer layer;
  layer.occupant.assign(static_cast<std::size_t>(num_qubits_), -1);
  layer.blocked.assign(static_cast<std::size_t>(num_qubits_), 0);
  return layer;
}

void RoutedCircuit::check_qubit(Vertex q) const {
  if (q < 0 || q >= num_qubits_) {
    throw Error("gate qubit " + std::to_string(q) + " outside [0," +
                std::to_string(num_qubits_) + ")");
  }
}

void RoutedCircuit::rebuild_occupancy(Layer &layer) const {
  std::fill(layer.occupant.begin(), layer.occupant.end(), -1);
  for (int i = 0; i < static_cast<int>(layer.gates.size()); ++i) {
    for (Vertex q : {layer.gates[i].a, layer.gates[i].b}) {
      if (layer.occupant[q] < 0) layer.occupant[q] = i;
    }
  }
}

void RoutedCircuit::trim() {
  while (!layers_.empty() && layers_.back().gates.empty()) layers_.pop_back();
}

int RoutedCircuit::append(const Gate &gate, int floor) {
  check_qubit(gate.a);
  check_qubit(gate.b);
  if (gate.a == gate.b) throw Error("gate acts twice on qubit " + std::to_string(gate.a));

  if (gate.kind == GateKind::Swap) {
    // Online cancellation: the latest gate on both qubits is the same SWAP.
    for (int l = static_cast<int>(layers_.size()) - 1; l >= 0; --l) {
      Layer &layer = layers_[l];
      if (layer.is_free(gate.a) && layer.is_free(gate.b)) continue;
      const int ia = layer.occupant[gate.a];
      if (ia >= 0 && ia == layer.occupant[gate.b] &&
          layer.gates[ia].kind == GateKind::Swap) {
        layer.gates.erase(layer.gates.begin() + ia);
        layer.blocked[gate.a] = 0;
        layer.blocked[gate.b] = 0;
        rebuild_occupancy(layer);
        trim();
        return -1;
      }
      break;
    }
  }

  int l = static_cast<int>(layers_.size());
  while (l > floor && layers_[l - 1].is_free(gate.a) && layers_[l - 1].is_free(gate.b)) --l;
  if (l == static_cast<int>(layers_.size())) layers_.push_back(make_layer());
  Layer &dest = layers_[l];
  dest.gates.push_back(gate);
  const int idx = static_cast<int>(dest.gates.size()) - 1;
  for (Vertex q : {gate.a, gate.b}) {
    dest.occupant[q] = idx;
    dest.blocked[q] = 1;
  }
  return l;
}

void RoutedCircuit::push_layer(std::vector<Gate> gates) {
  Layer layer = make_layer();
  for (const Gate &g : gates) {
    check_qubit(g.a);
    check_qubit(g.b);
  }
  layer.gates = std::move(gates);
  rebuild_occupancy(layer);
  for (const Gate &g : layer.gates) {
    layer.blocked[g.a] = 1;
    layer.blocked[g.b] = 1;
  }
  layers_.push_back(std::move(layer));
}

int RoutedCircuit::cancel_adjacent_swaps() {
  int removed = 0;
  auto drop = [this](int l, int idx) {
    Layer &layer = layers_[l];
    const Gate g = layer.gates[idx];
    layer.gates.erase(layer.gates.begin() + idx);
    layer.blocked[g.a] = 0;
    layer.blocked[g.b] = 0;
    rebuild_occupancy(layer);
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (int l = 0; l < static_cast<int>(layers_.size()) && !changed; ++l) {
      for (int i = 0; i < static_cast<int>(layers_[l].gates.size()); ++i) {
        const Gate g = layers_[l].gates[i];
        if (g.kind != GateKind::Swap) continue;
        int next = l + 1;
        while (next < static_cast<int>(layers_.size()) &&
               layers_[next].occupant[g.a] < 0 && layers_[next].occupant[g.b] < 0) {
          ++next;
        }
        if (next == static_cast<int>(layers_.size())) continue;
        const Layer &later = layers_[next];
        const int j = later.occupant[g.a];
        if (j < 0 || j != later.occupant[g.b]) continue;
        if (later.gates[j].kind != GateKind::Swap || !later.gates[j].same_pair(g)) continue;
        drop(next, j);
        drop(l, i);
        removed += 2;
        changed = true;
        break;
      }
    }
  }
  trim();
  return removed;
}

int RoutedCircuit::drop_trailing_swaps() {
  int removed = 0;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> last(static_cast<std::size_t>(num_qubits_), -1);
    for (int l = 0; l < static_cast<int>(layers_.size()); ++l) {
      for (const Gate &g : layers_[l].gates) {
        last[g.a] = l;
        last[g.b] = l;
      }
    }
    for (int l = static_cast<int>(layers_.size()) - 1; l >= 0; --l) {
      Layer &layer = layers_[l];
      for (int i = static_cast<int>(layer.gates.size()) - 1; i >= 0; --i) {
        const Gate g = layer.gates[i];
        if (g.kind != GateKind::Swap || last[g.a] != l || last[g.b] != l) continue;
        layer.gates.erase(layer.gates.begin() + i);
        layer.blocked[g.a] = 0;
        layer.blocked[g.b] = 0;
        rebuild_occupancy(layer);
        if (!final_mapping.empty()) {
          for (Vertex &p : final_mapping) {
            if (p == g.a) {
              p = g.b;
            } else if (p == g.b) {
              p = g.a;
            }
          }
        }
        ++removed;
        changed = true;
      }
    }
  }
  trim();
  return removed;
}

CircuitMetrics RoutedCircuit::metrics() const {
  CircuitMetrics m;
  m.layers = static_cast<int>(layers_.size());
  for (const Layer &layer : layers_) {
    if (!layer.gates.empty()) ++m.depth;
    for (const Gate &g : layer.gates) {
      (g.kind == GateKind::Swap ? m.swap_count : m.rzz_count) += 1;
    }
  }
  return m;
}

std::vector<Gate> RoutedCircuit::flatten() const {
  std::vector<Gate> out;
  for (const Layer &layer : layers_) out.insert(out.end(), layer.gates.begin(), layer.gates.end());
  return out;
}

std::string to_json(const RoutedCircuit &circuit, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n"] = circuit.num_qubits();
  doc["initial_mapping"] = circuit.initial_mapping;
  ordered_json layers = ordered_json::array();
  for (const Layer &layer : circuit.layers()) {
    if (layer.gates.empty()) continue;
    ordered_json gates = ordered_json::array();
    for (const Gate &g : layer.gates) {
      ordered_json jg;
      jg["kind"] = g.kind == GateKind::Swap ? "SWAP" : "RZZ";
      jg["qubits"] = {g.a, g.b};
      if (g.angle) jg["angle"] = *g.angle;
      gates.push_back(std::move(jg));
    }
    layers.push_back(std::move(gates));
  }
  doc["layers"] = std::move(layers);
  doc["final_mapping"] = circuit.final_mapping;
  return doc.dump(indent);
}

RoutedCircuit circuit_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(std::string("circuit JSON: ") + e.what());
  }
  try {
    RoutedCircuit circuit(doc.at("n").get<int>());
    circuit.initial_mapping = doc.at("initial_mapping").get<std::vector<Vertex>>();
    circuit.final_mapping = doc.at("final_mapping").get<std::vector<Vertex>>();
    for (const auto &jl : doc.at("layers")) {
      std::vector<Gate> gates;
      for (const auto &jg : jl) {
        const auto kind = jg.at("kind").get<std::string>();
        const auto qubits = jg.at("qubits").get<std::vector<Vertex>>();
        if (qubits.size() != 2) throw Error("circuit JSON: gate needs two qubits");
        Gate g;
        if (kind == "RZZ") {
          g.kind = GateKind::Rzz;
        } else if (kind == "SWAP") {
          g.kind = GateKind::Swap;
        } else {
          throw Error("circuit JSON: unknown gate kind '" + kind + "'");
        }
        g.a = qubits[0];
        g.b = qubits[1];
        if (jg.contains("angle")) g.angle = jg.at("angle").get<double>();
        gates.push_back(g);
      }
      circuit.push_layer(std::move(gates));
    }
    return circuit;
  } catch (const nlohmann::json::exception &e) {
    throw Error(std::string("circuit JSON: ") + e.what());
  }
}

}  // namespace qroute
