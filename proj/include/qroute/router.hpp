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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/distance.hpp"
#include "qroute/graph.hpp"
#include "qroute/mapper.hpp"
#include "qroute/random.hpp"

namespace qroute {

enum class SwapSource { Matched, PairedZero, Fallback, Escalation };

/// One applied swap (or jointly applied swap pair) with the buffer's total
/// distance D around it.
struct SwapEvent {
  SwapSource source = SwapSource::Matched;
  std::vector<Edge> couplers;
  long distance_before = 0;
  long distance_after = 0;
};

struct RouterConfig {
  bool enable_paired_zero_swaps = true;
  /// Consecutive iterations without an executed gate before the router
  /// forces the nearest buffer gate together. Unset means 3 * qubit count.
  std::optional<int> fallback_stall_limit;
  std::uint64_t seed = 0;
  /// Shuffle swap candidates of equal score (seeded) before matching.
  bool shuffle_matching = false;
  /// Re-verify all container invariants after every phase; throws on failure.
  bool check_invariants = false;
  std::function<void(const SwapEvent &)> on_swap;
};

struct ScoredCoupler {
  Edge coupler;
  int score = 0;
};

/// Couplers whose swap would lower D, i.e. positive swap candidates.
struct SwapGraph {
  std::vector<ScoredCoupler> edges;
};

/// A buffer gate (keeper, dropped) replaced by (keeper, chosen).
struct Replacement {
  EdgeId removed = -1;
  EdgeId added = -1;
};

struct RouterStats {
  int iterations = 0;
  int matched_swaps = 0;
  int paired_swaps = 0;
  int fallback_swaps = 0;
  int escalations = 0;
  int replacements = 0;
};

/**
 * Greedy buffer-driven SWAP router.
 *
 * State: the buffer (a qubit-disjoint set of target gates, each with its
 * current hardware distance cached), the interaction set of remaining gates,
 * and the mapping. Every problem edge is in exactly one of buffer,
 * interaction set or executed. Each iteration of step():
 *
 *   execute_ready_gates -> update_buffer -> build_swap_graph -> matching
 *   -> apply_matched_swaps -> paired_zero_swaps -> fallback_swap (if idle)
 *
 * Swap scores are D - D' (positive = the total buffer distance shrinks).
 * The graphs and distance matrix must outlive the router.
 */
class GreedyRouter {
 public:
  GreedyRouter(const ProblemGraph &pg, const HardwareGraph &hw, const DistanceMatrix &dist,
               Mapping initial, const GateSets &sets, RouterConfig cfg = {});

  /// Runs to completion and returns the finished circuit.
  RoutedCircuit run();

  /// One router iteration; false once every gate has executed.
  bool step();

  std::vector<EdgeId> execute_ready_gates();
  std::vector<Replacement> update_buffer();
  std::vector<EdgeId> refill_on_removal(std::span<const Vertex> freed);

  /// D - D' for swapping the occupants of coupler (a, b); nullopt when
  /// neither occupant is in the buffer. Throws if (a, b) is not a coupler.
  [[nodiscard]] std::optional<int> swap_score(Vertex a, Vertex b) const;
  /// D - D' for applying the given couplers in order.
  [[nodiscard]] int joint_score(std::span<const Edge> couplers) const;

  [[nodiscard]] SwapGraph build_swap_graph() const;
  /// Matching over the swap graph in the configured traversal order.
  [[nodiscard]] std::vector<Edge> match_swaps(const SwapGraph &sg);
  std::vector<Edge> apply_matched_swaps(std::span<const Edge> matching);
  std::vector<std::pair<Edge, Edge>> paired_zero_swaps();
  std::optional<Edge> fallback_swap();

  /// Walks one endpoint of the nearest buffer gate until it is adjacent.
  int escalate();

  /// Marks the start of a new swap layer.
  void begin_swap_layer();

  [[nodiscard]] bool done() const noexcept { return buffer_size_ == 0 && interaction_size_ == 0; }
  [[nodiscard]] long total_distance() const noexcept { return total_distance_; }
  [[nodiscard]] std::vector<EdgeId> buffer() const;
  [[nodiscard]] std::vector<EdgeId> interaction_set() const;
  [[nodiscard]] std::vector<EdgeId> executed() const;
  [[nodiscard]] const Mapping &mapping() const noexcept { return mapping_; }
  [[nodiscard]] const RoutedCircuit &circuit() const noexcept { return circuit_; }
  [[nodiscard]] const RouterStats &stats() const noexcept { return stats_; }
  /// Buffer partner of virtual qubit v, or -1.
  [[nodiscard]] Vertex partner(Vertex v) const { return partner_.at(v); }

  /// Throws Error if any container or cache invariant is broken.
  void check_invariants() const;

 private:
  enum class Where : std::uint8_t { Interaction, Buffer, Executed };

  [[nodiscard]] int hw_distance(Vertex va, Vertex vb) const {
    return dist_(mapping_.v2p[va], mapping_.v2p[vb]);
  }
  void add_to_buffer(EdgeId id);
  void remove_from_buffer(EdgeId id, Where to);
  void apply_swap(Vertex a, Vertex b);
  void apply_swaps(std::span<const Edge> couplers, SwapSource source);
  void reseed_buffer();
  [[nodiscard]] bool has_ready_gate() const;
  void maybe_check() const {
    if (cfg_.check_invariants) check_invariants();
  }

  const ProblemGraph &pg_;
  const HardwareGraph &hw_;
  const DistanceMatrix &dist_;
  RouterConfig cfg_;
  int stall_limit_;
  int swap_floor_ = 0;  // SWAPs stay behind the mapper's opening layers
  bool floor_fixed_ = false;
  Rng rng_;

  Mapping mapping_;
  RoutedCircuit circuit_;
  std::vector<Where> where_;
  std::vector<char> preferred_;  // per edge: chain second-class gate
  std::vector<Vertex> partner_;
  std::vector<int> cached_distance_;  // per virtual qubit, of its buffer gate
  std::vector<char> used_in_layer_;   // per physical qubit
  int buffer_size_ = 0;
  int interaction_size_ = 0;
  long total_distance_ = 0;
  int stall_ = 0;
  RouterStats stats_;
};

/// Mapper + greedy router. Throws Error for unroutable inputs.
RoutedCircuit route(const ProblemGraph &pg, const HardwareGraph &hw, const RouterConfig &cfg = {});

}  // namespace qroute
