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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qroute {

using Vertex = int;
using EdgeId = int;

/// Base error for all recoverable failures (bad input, unroutable instance).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Endpoint of `e` that is not `x`. `x` must be an endpoint.
inline Vertex other_end(const Edge &e, Vertex x) { return e.u == x ? e.v : e.u; }

/**
 * Simple undirected graph over vertices 0..n-1.
 *
 * Edge ids are assigned in insertion order and never change. Self-loops,
 * parallel edges and out-of-range endpoints are rejected on insertion.
 */
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  EdgeId add_edge(Vertex a, Vertex b);

  [[nodiscard]] int num_vertices() const noexcept { return n_; }
  [[nodiscard]] int num_edges() const noexcept {
    return static_cast<int>(edges_.size());
  }
  [[nodiscard]] const std::vector<Edge> &edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge &edge(EdgeId id) const { return edges_.at(id); }

  /// Ids of edges incident to `x`, in insertion order.
  [[nodiscard]] std::span<const EdgeId> incident(Vertex x) const {
    return incident_.at(x);
  }
  [[nodiscard]] int degree(Vertex x) const {
    return static_cast<int>(incident_.at(x).size());
  }
  [[nodiscard]] int max_degree() const noexcept;

  [[nodiscard]] std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const {
    return edge_id(a, b).has_value();
  }

  /// Neighbours of `x` sorted ascending.
  [[nodiscard]] std::vector<Vertex> neighbours(Vertex x) const;

  [[nodiscard]] bool is_connected() const;

  /// FNV-1a over the sorted edge list; identifies an instance in benchmark output.
  [[nodiscard]] std::uint64_t fingerprint() const;

 private:
  static std::uint64_t key(Vertex a, Vertex b) noexcept {
    const Edge e = make_edge(a, b);
    return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Virtual-qubit interaction graph; each edge is one pending R_zz gate.
class ProblemGraph : public SimpleGraph {
 public:
  ProblemGraph() = default;
  explicit ProblemGraph(int n) : SimpleGraph(n) {}

  EdgeId add_edge(Vertex a, Vertex b, double weight = 1.0);

  /// Coupling strength J_ij. Carried through I/O, ignored by routing.
  [[nodiscard]] double weight(EdgeId id) const { return weights_.at(id); }

 private:
  std::vector<double> weights_;
};

/// Rows x cols lattice with vertex id = row * cols + col; row 0 is the bottom row.
struct GridShape {
  int rows = 0;
  int cols = 0;

  [[nodiscard]] int row(Vertex p) const { return p / cols; }
  [[nodiscard]] int col(Vertex p) const { return p % cols; }
  [[nodiscard]] Vertex at(int r, int c) const { return r * cols + c; }
  [[nodiscard]] bool contains(int r, int c) const {
    return r >= 0 && r < rows && c >= 0 && c < cols;
  }
};

/// QPU coupler topology.
class HardwareGraph : public SimpleGraph {
 public:
  HardwareGraph() = default;
  explicit HardwareGraph(int m);

  EdgeId add_coupler(Vertex a, Vertex b);

  [[nodiscard]] bool is_coupler(Vertex a, Vertex b) const {
    return adjacency_.at(static_cast<std::size_t>(a) * num_vertices() + b) != 0;
  }

  /// Declares a Hamiltonian path. Throws if it is not one.
  void set_hamiltonian_path(std::vector<Vertex> path);
  [[nodiscard]] const std::optional<std::vector<Vertex>> &declared_path() const {
    return path_;
  }

  void set_grid_shape(GridShape shape);
  [[nodiscard]] const std::optional<GridShape> &grid_shape() const { return grid_; }

 private:
  std::vector<char> adjacency_;
  std::optional<std::vector<Vertex>> path_;
  std::optional<GridShape> grid_;
};

/// True if `path` visits every vertex of `hw` once and consecutive entries are couplers.
bool is_hamiltonian_path(const HardwareGraph &hw, std::span<const Vertex> path);

}  // namespace qroute
