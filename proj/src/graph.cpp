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

#include "qroute/graph.hpp"

#include <algorithm>
#include <queue>

namespace qroute {

SimpleGraph::SimpleGraph(int n) : n_(n), incident_(static_cast<std::size_t>(n)) {
  if (n < 0) throw Error("vertex count must be nonnegative");
}

EdgeId SimpleGraph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw Error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                ") has an endpoint outside [0," + std::to_string(n_) + ")");
  }
  if (a == b) throw Error("self-loop on vertex " + std::to_string(a));
  const auto k = key(a, b);
  if (index_.contains(k)) {
    throw Error("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  const EdgeId id = num_edges();
  edges_.push_back(make_edge(a, b));
  incident_[a].push_back(id);
  incident_[b].push_back(id);
  index_.emplace(k, id);
  return id;
}

int SimpleGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto &inc : incident_) best = std::max(best, inc.size());
  return static_cast<int>(best);
}

std::optional<EdgeId> SimpleGraph::edge_id(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const auto it = index_.find(key(a, b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> SimpleGraph::neighbours(Vertex x) const {
  std::vector<Vertex> out;
  out.reserve(incident_.at(x).size());
  for (EdgeId id : incident_[x]) out.push_back(other_end(edges_[id], x));
  std::sort(out.begin(), out.end());
  return out;
}

bool SimpleGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (EdgeId id : incident_[x]) {
      const Vertex y = other_end(edges_[id], x);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        frontier.push(y);
      }
    }
  }
  return count == n_;
}

std::uint64_t SimpleGraph::fingerprint() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint32_t word) {
    for (int i = 0; i < 4; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint32_t>(n_));
  for (const Edge &e : sorted) {
    mix(static_cast<std::uint32_t>(e.u));
    mix(static_cast<std::uint32_t>(e.v));
  }
  return h;
}

EdgeId ProblemGraph::add_edge(Vertex a, Vertex b, double weight) {
  const EdgeId id = SimpleGraph::add_edge(a, b);
  weights_.push_back(weight);
  return id;
}

HardwareGraph::HardwareGraph(int m)
    : SimpleGraph(m), adjacency_(static_cast<std::size_t>(m) * m, 0) {}

EdgeId HardwareGraph::add_coupler(Vertex a, Vertex b) {
  const EdgeId id = SimpleGraph::add_edge(a, b);
  const auto m = static_cast<std::size_t>(num_vertices());
  adjacency_[a * m + b] = 1;
  adjacency_[b * m + a] = 1;
  return id;
}

void HardwareGraph::set_hamiltonian_path(std::vector<Vertex> path) {
  if (!is_hamiltonian_path(*this, path)) {
    throw Error("declared path is not a Hamiltonian path of the hardware graph");
  }
  path_ = std::move(path);
}

void HardwareGraph::set_grid_shape(GridShape shape) {
  if (shape.rows * shape.cols != num_vertices()) {
    throw Error("grid shape does not match the qubit count");
  }
  grid_ = shape;
}

bool is_hamiltonian_path(const HardwareGraph &hw, std::span<const Vertex> path) {
  const int m = hw.num_vertices();
  if (static_cast<int>(path.size()) != m) return false;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex p = path[i];
    if (p < 0 || p >= m || seen[p]) return false;
    seen[p] = 1;
    if (i > 0 && !hw.is_coupler(path[i - 1], p)) return false;
  }
  return true;
}

}  // namespace qroute
