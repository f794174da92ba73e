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

#include <span>
#include <vector>

#include "qroute/graph.hpp"

namespace qroute {

/// Proper edge coloring; color[id] is the class of problem edge `id`.
struct EdgeColoring {
  std::vector<int> color;
  int num_colors = 0;

  /// Edge ids per color class, each in ascending id order.
  [[nodiscard]] std::vector<std::vector<EdgeId>> classes() const;
};

/**
 * Misra-Gries edge coloring. Uses at most max_degree + 1 colors; unused
 * trailing colors are dropped and the remaining ones renumbered densely in
 * order of first use. Edges are processed in id order, so the result is a
 * pure function of the graph. An edge whose endpoints share a free color
 * takes the smallest such color directly; only the rest go through the fan
 * and path inversion.
 */
EdgeColoring edge_coloring(const SimpleGraph &g);

/// True if no two edges sharing a vertex have the same color.
bool is_proper_coloring(const SimpleGraph &g, const EdgeColoring &col);

/// Greedy maximal matching: edges are taken in the given order whenever
/// both endpoints are still unmatched.
std::vector<Edge> maximal_matching(std::span<const Edge> edges);

}  // namespace qroute
