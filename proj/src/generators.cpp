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

#include "qroute/generators.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qroute/random.hpp"

namespace qroute {
namespace {

constexpr int kPairingAttempts = 64;

ProblemGraph from_sorted(int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  ProblemGraph g(n);
  for (const Edge &e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool is_simple(const std::vector<Edge> &edges) {
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i].v) return false;
    if (i > 0 && sorted[i] == sorted[i - 1]) return false;
  }
  return true;
}

std::vector<Edge> random_pairing(int n, int k, Rng &rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * k);
  for (Vertex x = 0; x < n; ++x) stubs.insert(stubs.end(), k, x);
  rng.shuffle(std::span<Vertex>(stubs));
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    edges.push_back(make_edge(stubs[i], stubs[i + 1]));
  }
  return edges;
}

// Degree-preserving double-edge switches that remove loops and parallel
// edges from a pairing. Returns false if the budget runs out.
bool repair_by_switching(std::vector<Edge> &edges, Rng &rng, long budget) {
  std::map<Edge, int> count;
  for (const Edge &e : edges) ++count[e];
  auto is_bad = [&](const Edge &e) { return e.u == e.v || count[e] > 1; };

  for (long step = 0; step < budget; ++step) {
    std::size_t bad = edges.size();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (is_bad(edges[i])) {
        bad = i;
        break;
      }
    }
    if (bad == edges.size()) return true;

    const auto other = static_cast<std::size_t>(rng.below(edges.size()));
    if (other == bad) continue;
    const Vertex a = edges[bad].u;
    const Vertex b = edges[bad].v;
    Vertex c = edges[other].u;
    Vertex d = edges[other].v;
    if (rng.below(2) == 1) std::swap(c, d);
    if (a == c || b == d) continue;
    const Edge e1 = make_edge(a, c);
    const Edge e2 = make_edge(b, d);
    if (e1 == e2 || count[e1] > 0 || count[e2] > 0) continue;
    --count[edges[bad]];
    --count[edges[other]];
    edges[bad] = e1;
    edges[other] = e2;
    ++count[e1];
    ++count[e2];
  }
  return is_simple(edges);
}

}  // namespace

ProblemGraph gen_k_regular(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 0) throw Error("k-regular: need n >= 1 and k >= 0");
  if (k >= n) {
    throw Error("k-regular: degree " + std::to_string(k) + " must be below n = " +
                std::to_string(n));
  }
  if ((static_cast<long>(n) * k) % 2 != 0) {
    throw Error("k-regular: n*k must be even");
  }
  if (k == 0) return ProblemGraph(n);
  if (k == n - 1) {
    std::vector<Edge> all;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) all.push_back({a, b});
    return from_sorted(n, std::move(all));
  }

  Rng rng(seed);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < kPairingAttempts; ++attempt) {
    edges = random_pairing(n, k, rng);
    if (is_simple(edges)) return from_sorted(n, std::move(edges));
  }
  if (!repair_by_switching(edges, rng, 200L * n * k)) {
    throw Error("k-regular: could not realise a simple graph for n=" +
                std::to_string(n) + ", k=" + std::to_string(k));
  }
  return from_sorted(n, std::move(edges));
}

ProblemGraph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error("erdos-renyi: n must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("erdos-renyi: p must lie in [0, 1]");
  Rng rng(seed);
  ProblemGraph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.uniform() < p) g.add_edge(a, b);
    }
  }
  return g;
}

HardwareGraph square_grid(int side) {
  if (side < 2) throw Error("square grid: side must be at least 2");
  const GridShape shape{side, side};
  HardwareGraph hw(side * side);
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) hw.add_coupler(shape.at(r, c), shape.at(r, c + 1));
      if (r + 1 < side) hw.add_coupler(shape.at(r, c), shape.at(r + 1, c));
    }
  }
  // Snake from the bottom row upward, alternating direction per row.
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(side) * side);
  for (int r = 0; r < side; ++r) {
    for (int i = 0; i < side; ++i) {
      const int c = (r % 2 == 0) ? i : side - 1 - i;
      path.push_back(shape.at(r, c));
    }
  }
  hw.set_grid_shape(shape);
  hw.set_hamiltonian_path(std::move(path));
  return hw;
}

HardwareGraph path_hardware(int m) {
  if (m < 1) throw Error("path hardware: need at least one qubit");
  HardwareGraph hw(m);
  std::vector<Vertex> path{0};
  for (Vertex p = 1; p < m; ++p) {
    hw.add_coupler(p - 1, p);
    path.push_back(p);
  }
  hw.set_hamiltonian_path(std::move(path));
  return hw;
}

HardwareGraph complete_hardware(int m) {
  if (m < 1) throw Error("complete hardware: need at least one qubit");
  HardwareGraph hw(m);
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = a + 1; b < m; ++b) hw.add_coupler(a, b);
  return hw;
}

}  // namespace qroute
