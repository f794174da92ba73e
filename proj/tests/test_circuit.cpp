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


#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qroute/circuit.hpp"
#include "qroute/random.hpp"

namespace qroute {

TEST_CASE("append pushes gates back") {
  RoutedCircuit c(6);
  CHECK(c.append(Gate::rzz(0, 1)) == 0);
  CHECK(c.append(Gate::rzz(2, 3)) == 0);
  CHECK(c.append(Gate::rzz(1, 2)) == 1);
  CHECK(c.append(Gate::swap(4, 5)) == 0);
  CHECK(c.append(Gate::swap(3, 4)) == 1);
  CHECK(c.append(Gate::rzz(0, 5)) == 1);
  CHECK(c.metrics().depth == 2);
  // SWAP and RZZ share a layer.
  const auto &l1 = c.layers()[1].gates;
  CHECK(std::any_of(l1.begin(), l1.end(), [](const Gate &g) { return g.kind == GateKind::Swap; }));
  CHECK(std::any_of(l1.begin(), l1.end(), [](const Gate &g) { return g.kind == GateKind::Rzz; }));
  CHECK_THROWS_AS(c.append(Gate::rzz(0, 6)), Error);
  CHECK_THROWS_AS(c.append(Gate::rzz(2, 2)), Error);
}

TEST_CASE("a gate cannot tunnel past a blocker") {
  RoutedCircuit c(4);
  c.append(Gate::rzz(0, 1));
  c.append(Gate::rzz(1, 2));
  c.append(Gate::rzz(2, 3));
  // Qubit 0 is free in layers 1 and 2 but 3 is busy in layer 2.
  CHECK(c.append(Gate::rzz(0, 3)) == 3);
}

TEST_CASE("push-back stops at the floor") {
  RoutedCircuit c(4);
  c.append(Gate::rzz(0, 1));
  c.append(Gate::rzz(1, 2));
  CHECK(c.append(Gate::swap(2, 3), 2) == 2);
  CHECK(c.append(Gate::swap(0, 3), 5) == 3);
  CHECK(c.append(Gate::rzz(0, 1)) == 4);
}

TEST_CASE("adjacent SWAPs cancel") {
  SECTION("back to back") {
    RoutedCircuit c(3);
    c.append(Gate::swap(0, 1));
    CHECK(c.append(Gate::swap(1, 0)) == -1);
    CHECK(c.metrics().swap_count == 0);
    CHECK(c.metrics().depth == 0);
  }
  SECTION("an intervening gate keeps both") {
    RoutedCircuit c(3);
    c.append(Gate::swap(0, 1));
    c.append(Gate::rzz(0, 2));
    CHECK(c.append(Gate::swap(0, 1)) >= 0);
    CHECK(c.metrics().swap_count == 2);
    CHECK(c.cancel_adjacent_swaps() == 0);
  }
  SECTION("final pass over raw layers") {
    RoutedCircuit c(4);
    c.push_layer({Gate::swap(0, 1), Gate::rzz(2, 3)});
    c.push_layer({Gate::rzz(2, 3)});
    c.push_layer({Gate::swap(1, 0)});
    CHECK(c.cancel_adjacent_swaps() == 2);
    CHECK(c.metrics().swap_count == 0);
    CHECK(c.metrics().rzz_count == 2);
  }
  SECTION("no swaps") {
    RoutedCircuit c(2);
    c.append(Gate::rzz(0, 1));
    CHECK(c.cancel_adjacent_swaps() == 0);
  }
}

TEST_CASE("metrics") {
  RoutedCircuit empty(3);
  CHECK(empty.metrics().depth == 0);
  CHECK(empty.metrics().swap_count == 0);
  CHECK(empty.metrics().rzz_count == 0);
  RoutedCircuit one(3);
  one.append(Gate::rzz(0, 2));
  CHECK(one.metrics().depth == 1);
  CHECK(one.metrics().rzz_count == 1);
}

TEST_CASE("drop_trailing_swaps patches the final mapping") {
  RoutedCircuit c(3);
  c.initial_mapping = {0, 1, 2};
  c.append(Gate::rzz(0, 1));
  c.append(Gate::swap(1, 2));
  c.append(Gate::rzz(0, 1));
  c.append(Gate::swap(0, 1));
  c.final_mapping = oracle::replay_mapping(c);
  CHECK(c.final_mapping == std::vector<Vertex>{1, 2, 0});
  CHECK(c.drop_trailing_swaps() == 1);
  CHECK(c.metrics().swap_count == 1);
  CHECK(c.final_mapping == oracle::replay_mapping(c));
}

TEST_CASE("push-back matches ASAP scheduling and keeps per-qubit order") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const int n = 2 + static_cast<int>(rng.below(9));
    RoutedCircuit c(n);
    std::vector<int> ready(n, 0);
    std::vector<std::vector<std::pair<Vertex, Vertex>>> order(n);
    int asap_depth = 0;
    for (int i = 0; i < 60; ++i) {
      const auto a = static_cast<Vertex>(rng.below(n));
      auto b = static_cast<Vertex>(rng.below(n - 1));
      if (b >= a) ++b;
      const int layer = c.append(Gate::rzz(a, b));
      const int expected = std::max(ready[a], ready[b]);
      REQUIRE(layer == expected);
      ready[a] = ready[b] = expected + 1;
      asap_depth = std::max(asap_depth, expected + 1);
      order[a].emplace_back(a, b);
      order[b].emplace_back(a, b);
    }
    CHECK(c.metrics().depth == asap_depth);
    for (Vertex q = 0; q < n; ++q) {
      const auto hist = oracle::qubit_history(c, q);
      REQUIRE(hist.size() == order[q].size());
      for (std::size_t k = 0; k < hist.size(); ++k) {
        CHECK(hist[k].a == order[q][k].first);
        CHECK(hist[k].b == order[q][k].second);
      }
    }
    for (const Layer &layer : c.layers()) {
      std::vector<int> uses(n, 0);
      for (const Gate &g : layer.gates) {
        CHECK(++uses[g.a] == 1);
        CHECK(++uses[g.b] == 1);
      }
    }
  }
}

TEST_CASE("circuit JSON") {
  RoutedCircuit c(4);
  c.initial_mapping = {2, 0, 1, 3};
  c.append(Gate::rzz(0, 1));
  Gate with_angle = Gate::rzz(1, 2);
  with_angle.angle = 0.25;
  c.append(with_angle);
  c.append(Gate::swap(0, 3));
  c.final_mapping = oracle::replay_mapping(c);

  const auto text = to_json(c);
  CHECK(text ==
        R"({"n":4,"initial_mapping":[2,0,1,3],"layers":[[{"kind":"RZZ","qubits":[0,1]}],)"
        R"([{"kind":"RZZ","qubits":[1,2],"angle":0.25},{"kind":"SWAP","qubits":[0,3]}]],)"
        R"("final_mapping":[2,3,1,0]})");
  const auto back = circuit_from_json(text);
  CHECK(to_json(back) == text);
  CHECK(back.metrics().depth == 2);

  CHECK_THROWS_AS(circuit_from_json("{"), Error);
  CHECK_THROWS_AS(circuit_from_json(R"({"n":2,"initial_mapping":[0,1],"final_mapping":[0,1],)"
                                    R"("layers":[[{"kind":"CZ","qubits":[0,1]}]]})"),
                  Error);
}

}  // namespace qroute
