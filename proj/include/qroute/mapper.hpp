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
#include <span>
#include <vector>

#include "qroute/coloring.hpp"
#include "qroute/graph.hpp"

namespace qroute {

/// Bijection between virtual qubits and physical qubits.
struct Mapping {
  std::vector<Vertex> v2p;
  std::vector<Vertex> p2v;

  static Mapping identity(int n);
  /// Builds p2v from v2p; throws unless v2p is a permutation of [0, n).
  static Mapping from_v2p(std::vector<Vertex> v2p);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(v2p.size()); }
  [[nodiscard]] bool is_bijection() const;

  /// Exchanges the virtual occupants of physical qubits a and b.
  void swap_physical(Vertex a, Vertex b) {
    std::swap(p2v[a], p2v[b]);
    v2p[p2v[a]] = a;
    v2p[p2v[b]] = b;
  }
};

/// The two color classes chained by the mapper. `first` is the larger.
struct ColorPair {
  std::optional<int> first;
  std::optional<int> second;
};

/// Picks the two largest classes, ties to the lower color index.
ColorPair select_color_pair(std::span<const std::size_t> class_sizes);
ColorPair select_color_pair(const EdgeColoring &col);

enum class LinkKind {
  First,     ///< edge of the first color class (a gate)
  Second,    ///< edge of the second color class (a gate)
  Junction,  ///< join between two components; not a gate
};

/// A simple path through every virtual qubit; links[i] joins vertices[i] and vertices[i+1].
struct Chain {
  std::vector<Vertex> vertices;
  std::vector<LinkKind> links;
  /// Class edges that had to be dropped to linearise cycles.
  std::vector<Edge> leftover;
};

/**
 * Linearises the union of two matchings over n vertices into one chain.
 *
 * Cycles are cut at their smallest second-class edge, which lands in
 * `leftover`. Components are concatenated longest first (ties: smallest
 * vertex id) and each starts at its smaller endpoint; consecutive components
 * are joined by Junction links. Throws if either class is not a matching.
 */
Chain build_chain(int n, std::span<const Edge> first, std::span<const Edge> second);

/// Declared path if present, otherwise a bounded backtracking search.
std::vector<Vertex> hamiltonian_path(const HardwareGraph &hw);

/// i-th chain vertex goes to the i-th path vertex.
Mapping embed_chain(const Chain &chain, std::span<const Vertex> path);

/// Initial contents of the router's buffer and interaction set (edge ids, ascending).
struct GateSets {
  std::vector<EdgeId> buffer;
  std::vector<EdgeId> interaction;
  /// Chain gates of the second class (a subset of `interaction`): the
  /// intended second layer, preferred by the router on distance ties.
  std::vector<EdgeId> second_layer;
};

/// Buffer gets the chain's first-class gates; every other problem edge goes to the interaction set.
GateSets init_sets(const ProblemGraph &pg, const Chain &chain);

/// Everything the mapper produces for one instance.
struct InitialPlacement {
  EdgeColoring coloring;
  ColorPair colors;
  Chain chain;
  std::vector<Vertex> path;
  Mapping mapping;
  GateSets sets;
};

/// Full mapper pipeline. Requires pg and hw to have the same qubit count.
InitialPlacement place(const ProblemGraph &pg, const HardwareGraph &hw);

}  // namespace qroute
