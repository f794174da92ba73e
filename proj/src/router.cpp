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

#include "qroute/router.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

#include "qroute/coloring.hpp"

namespace qroute {

GreedyRouter::GreedyRouter(const ProblemGraph &pg, const HardwareGraph &hw,
                           const DistanceMatrix &dist, Mapping initial, const GateSets &sets,
                           RouterConfig cfg)
    : pg_(pg),
      hw_(hw),
      dist_(dist),
      cfg_(std::move(cfg)),
      stall_limit_(cfg_.fallback_stall_limit.value_or(3 * hw.num_vertices())),
      rng_(cfg_.seed),
      mapping_(std::move(initial)),
      circuit_(hw.num_vertices()) {
  const int n = pg.num_vertices();
  if (n != hw.num_vertices() || n != dist.size() || n != mapping_.size()) {
    throw Error("router: problem, hardware, distance table and mapping sizes differ");
  }
  if (!mapping_.is_bijection()) throw Error("router: initial mapping is not a bijection");
  if (stall_limit_ < 1) throw Error("router: fallback stall limit must be at least 1");

  where_.assign(static_cast<std::size_t>(pg.num_edges()), Where::Executed);
  partner_.assign(static_cast<std::size_t>(n), -1);
  cached_distance_.assign(static_cast<std::size_t>(n), 0);
  used_in_layer_.assign(static_cast<std::size_t>(n), 0);

  std::vector<char> listed(where_.size(), 0);
  auto claim = [&](EdgeId id) {
    if (id < 0 || id >= pg.num_edges() || listed[id]) {
      throw Error("router: gate sets must partition the problem edges");
    }
    listed[id] = 1;
  };
  for (EdgeId id : sets.interaction) {
    claim(id);
    where_[id] = Where::Interaction;
    ++interaction_size_;
  }
  for (EdgeId id : sets.buffer) {
    claim(id);
    const Edge &e = pg.edge(id);
    if (partner_[e.u] >= 0 || partner_[e.v] >= 0) {
      throw Error("router: initial buffer is not qubit-disjoint");
    }
    add_to_buffer(id);
  }
  if (std::find(listed.begin(), listed.end(), 0) != listed.end()) {
    throw Error("router: gate sets must partition the problem edges");
  }
  if (!sets.buffer.empty()) swap_floor_ = sets.second_layer.empty() ? 1 : 2;
  preferred_.assign(where_.size(), 0);
  for (EdgeId id : sets.second_layer) {
    if (id < 0 || id >= pg.num_edges()) throw Error("router: bad second-layer gate id");
    preferred_[id] = 1;
  }
  circuit_.initial_mapping = mapping_.v2p;
}

void GreedyRouter::add_to_buffer(EdgeId id) {
  const Edge &e = pg_.edge(id);
  if (where_[id] == Where::Interaction) --interaction_size_;
  where_[id] = Where::Buffer;
  partner_[e.u] = e.v;
  partner_[e.v] = e.u;
  const int d = hw_distance(e.u, e.v);
  cached_distance_[e.u] = d;
  cached_distance_[e.v] = d;
  total_distance_ += d;
  ++buffer_size_;
}

void GreedyRouter::remove_from_buffer(EdgeId id, Where to) {
  const Edge &e = pg_.edge(id);
  total_distance_ -= cached_distance_[e.u];
  partner_[e.u] = -1;
  partner_[e.v] = -1;
  where_[id] = to;
  --buffer_size_;
  if (to == Where::Interaction) ++interaction_size_;
}

std::vector<EdgeId> GreedyRouter::execute_ready_gates() {
  std::vector<EdgeId> executed;
  const int n = pg_.num_vertices();
  while (true) {
    std::vector<Vertex> freed;
    for (Vertex u = 0; u < n; ++u) {
      const Vertex v = partner_[u];
      if (v <= u || cached_distance_[u] != 1) continue;
      const EdgeId id = *pg_.edge_id(u, v);
      circuit_.append(Gate::rzz(mapping_.v2p[u], mapping_.v2p[v], Edge{u, v}));
      remove_from_buffer(id, Where::Executed);
      executed.push_back(id);
      freed.push_back(u);
      freed.push_back(v);
    }
    if (freed.empty()) break;
    refill_on_removal(freed);
  }
  return executed;
}

std::vector<EdgeId> GreedyRouter::refill_on_removal(std::span<const Vertex> freed) {
  // Candidates touching a freed qubit, nearest first; on equal distance the
  // mapper's second-layer gates go first.
  std::vector<std::tuple<int, int, EdgeId>> candidates;
  for (Vertex q : freed) {
    if (partner_[q] >= 0) continue;
    for (EdgeId id : pg_.incident(q)) {
      if (where_[id] != Where::Interaction) continue;
      const Vertex w = other_end(pg_.edge(id), q);
      if (partner_[w] >= 0) continue;
      candidates.emplace_back(hw_distance(q, w), preferred_[id] ? 0 : 1, id);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<EdgeId> added;
  for (const auto &[d, rank, id] : candidates) {
    const Edge &e = pg_.edge(id);
    if (where_[id] != Where::Interaction || partner_[e.u] >= 0 || partner_[e.v] >= 0) continue;
    add_to_buffer(id);
    added.push_back(id);
  }
  return added;
}

std::vector<Replacement> GreedyRouter::update_buffer() {
  std::vector<Replacement> out;
  for (EdgeId id : buffer()) {
    if (where_[id] != Where::Buffer) continue;
    const Edge gate = pg_.edge(id);
    // (distance, new partner, keeper, edge)
    std::optional<std::tuple<int, Vertex, Vertex, EdgeId>> best;
    for (Vertex keeper : {gate.u, gate.v}) {
      for (EdgeId f : pg_.incident(keeper)) {
        if (where_[f] != Where::Interaction) continue;
        const Vertex z = other_end(pg_.edge(f), keeper);
        if (partner_[z] >= 0) continue;
        const auto cand = std::make_tuple(hw_distance(keeper, z), z, keeper, f);
        if (!best || cand < *best) best = cand;
      }
    }
    if (!best || std::get<0>(*best) >= cached_distance_[gate.u]) continue;
    const Vertex keeper = std::get<2>(*best);
    const Vertex dropped = other_end(gate, keeper);
    remove_from_buffer(id, Where::Interaction);
    add_to_buffer(std::get<3>(*best));
    out.push_back({id, std::get<3>(*best)});
    ++stats_.replacements;
    const Vertex freed[] = {dropped};
    refill_on_removal(freed);
  }
  return out;
}

int GreedyRouter::joint_score(std::span<const Edge> couplers) const {
  // Overlay of (physical, virtual) occupants touched by the swaps.
  std::vector<std::pair<Vertex, Vertex>> overlay;
  auto occupant = [&](Vertex p) {
    for (const auto &[q, v] : overlay)
      if (q == p) return v;
    return mapping_.p2v[p];
  };
  auto place = [&](Vertex p, Vertex v) {
    for (auto &[q, w] : overlay) {
      if (q == p) {
        w = v;
        return;
      }
    }
    overlay.emplace_back(p, v);
  };
  auto position = [&](Vertex v) {
    for (const auto &[q, w] : overlay)
      if (w == v) return q;
    return mapping_.v2p[v];
  };
  for (const Edge &c : couplers) {
    const Vertex x = occupant(c.u);
    const Vertex y = occupant(c.v);
    place(c.u, y);
    place(c.v, x);
  }

  int score = 0;
  std::vector<Vertex> counted;
  for (const auto &[p, x] : overlay) {
    const Vertex px = partner_[x];
    if (px < 0) continue;
    const Vertex key = std::min(x, px);
    if (std::find(counted.begin(), counted.end(), key) != counted.end()) continue;
    counted.push_back(key);
    score += cached_distance_[x] - dist_(position(x), position(px));
  }
  return score;
}

std::optional<int> GreedyRouter::swap_score(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= hw_.num_vertices() || b >= hw_.num_vertices() ||
      !hw_.is_coupler(a, b)) {
    throw Error("swap_score: (" + std::to_string(a) + "," + std::to_string(b) +
                ") is not a coupler");
  }
  if (partner_[mapping_.p2v[a]] < 0 && partner_[mapping_.p2v[b]] < 0) return std::nullopt;
  const Edge c = make_edge(a, b);
  return joint_score(std::span<const Edge>(&c, 1));
}

SwapGraph GreedyRouter::build_swap_graph() const {
  SwapGraph sg;
  for (const Edge &c : hw_.edges()) {
    const auto s = swap_score(c.u, c.v);
    if (s && *s >= 1) sg.edges.push_back({c, *s});
  }
  return sg;
}

std::vector<Edge> GreedyRouter::match_swaps(const SwapGraph &sg) {
  std::vector<ScoredCoupler> order = sg.edges;
  if (cfg_.shuffle_matching) {
    rng_.shuffle(std::span<ScoredCoupler>(order));
    std::stable_sort(order.begin(), order.end(),
                     [](const auto &x, const auto &y) { return x.score > y.score; });
  } else {
    std::sort(order.begin(), order.end(), [](const auto &x, const auto &y) {
      return std::tie(y.score, x.coupler) < std::tie(x.score, y.coupler);
    });
  }
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (const auto &sc : order) edges.push_back(sc.coupler);
  return maximal_matching(edges);
}

void GreedyRouter::begin_swap_layer() {
  std::fill(used_in_layer_.begin(), used_in_layer_.end(), 0);
}

void GreedyRouter::apply_swap(Vertex a, Vertex b) {
  const Vertex x = mapping_.p2v[a];
  const Vertex y = mapping_.p2v[b];
  mapping_.swap_physical(a, b);
  for (Vertex moved : {x, y}) {
    const Vertex p = partner_[moved];
    if (p < 0) continue;
    const int d = hw_distance(moved, p);
    total_distance_ += d - cached_distance_[moved];
    cached_distance_[moved] = d;
    cached_distance_[p] = d;
  }
  if (!floor_fixed_) {
    swap_floor_ = std::min(swap_floor_, static_cast<int>(circuit_.layers().size()));
    floor_fixed_ = true;
  }
  circuit_.append(Gate::swap(a, b), swap_floor_);
  used_in_layer_[a] = 1;
  used_in_layer_[b] = 1;
}

void GreedyRouter::apply_swaps(std::span<const Edge> couplers, SwapSource source) {
  SwapEvent event;
  event.source = source;
  event.distance_before = total_distance_;
  for (const Edge &c : couplers) {
    apply_swap(c.u, c.v);
    event.couplers.push_back(c);
  }
  event.distance_after = total_distance_;
  const int count = static_cast<int>(couplers.size());
  switch (source) {
    case SwapSource::Matched: stats_.matched_swaps += count; break;
    case SwapSource::PairedZero: stats_.paired_swaps += count; break;
    case SwapSource::Fallback: stats_.fallback_swaps += count; break;
    case SwapSource::Escalation: break;
  }
  if (cfg_.on_swap) cfg_.on_swap(event);
}

std::vector<Edge> GreedyRouter::apply_matched_swaps(std::span<const Edge> matching) {
  std::vector<Edge> applied;
  for (const Edge &c : matching) {
    // Earlier swaps in the matching may have neutralised this one.
    const auto s = swap_score(c.u, c.v);
    if (!s || *s < 1) continue;
    apply_swaps(std::span<const Edge>(&c, 1), SwapSource::Matched);
    applied.push_back(c);
  }
  return applied;
}

std::vector<std::pair<Edge, Edge>> GreedyRouter::paired_zero_swaps() {
  std::vector<std::pair<Edge, Edge>> applied;
  const auto &grid = hw_.grid_shape();
  if (!cfg_.enable_paired_zero_swaps || !grid) return applied;

  for (Vertex u = 0; u < pg_.num_vertices(); ++u) {
    const Vertex v = partner_[u];
    if (v <= u || cached_distance_[u] < 2) continue;
    const Vertex pu = mapping_.v2p[u];
    const Vertex pv = mapping_.v2p[v];
    // Moving both qubits of a row- (column-) aligned pair one step
    // perpendicular leaves their distance unchanged.
    std::vector<std::pair<int, int>> steps;
    if (grid->row(pu) == grid->row(pv)) steps = {{1, 0}, {-1, 0}};
    if (grid->col(pu) == grid->col(pv)) steps = {{0, 1}, {0, -1}};

    std::optional<std::pair<int, std::array<Edge, 2>>> best;
    for (const auto &[dr, dc] : steps) {
      const int ru = grid->row(pu) + dr, cu = grid->col(pu) + dc;
      const int rv = grid->row(pv) + dr, cv = grid->col(pv) + dc;
      if (!grid->contains(ru, cu) || !grid->contains(rv, cv)) continue;
      const Vertex tu = grid->at(ru, cu);
      const Vertex tv = grid->at(rv, cv);
      if (used_in_layer_[pu] || used_in_layer_[pv] || used_in_layer_[tu] || used_in_layer_[tv]) {
        continue;
      }
      const auto s1 = swap_score(pu, tu);
      const auto s2 = swap_score(pv, tv);
      if (!s1 || !s2 || *s1 > 0 || *s2 > 0 || *s1 + *s2 < -1) continue;
      const std::array<Edge, 2> pair{make_edge(pu, tu), make_edge(pv, tv)};
      const int joint = joint_score(pair);
      if (joint >= 1 && (!best || joint > best->first)) best.emplace(joint, pair);
    }
    if (best) {
      apply_swaps(best->second, SwapSource::PairedZero);
      applied.emplace_back(best->second[0], best->second[1]);
    }
  }
  return applied;
}

std::optional<Edge> GreedyRouter::fallback_swap() {
  if (buffer_size_ == 0) return std::nullopt;
  std::vector<Edge> candidates;
  for (const Edge &c : hw_.edges()) {
    const Vertex occ[] = {mapping_.p2v[c.u], mapping_.p2v[c.v]};
    const Vertex dest[] = {c.v, c.u};
    bool closer = false;
    for (int i = 0; i < 2; ++i) {
      const Vertex p = partner_[occ[i]];
      if (p < 0 || p == occ[1 - i]) continue;
      if (dist_(dest[i], mapping_.v2p[p]) < cached_distance_[occ[i]]) closer = true;
    }
    if (closer && joint_score(std::span<const Edge>(&c, 1)) == 0) candidates.push_back(c);
  }
  if (candidates.empty()) {
    throw Error("router: no zero-score fallback swap exists");
  }
  const Edge chosen = candidates[rng_.below(candidates.size())];
  apply_swaps(std::span<const Edge>(&chosen, 1), SwapSource::Fallback);
  return chosen;
}

int GreedyRouter::escalate() {
  std::optional<std::pair<int, Vertex>> nearest;
  for (Vertex u = 0; u < pg_.num_vertices(); ++u) {
    const Vertex v = partner_[u];
    if (v <= u) continue;
    const auto cand = std::make_pair(cached_distance_[u], u);
    if (!nearest || cand < *nearest) nearest = cand;
  }
  if (!nearest) return 0;
  ++stats_.escalations;
  const Vertex u = nearest->second;
  const Vertex v = partner_[u];
  int swaps = 0;
  while (hw_distance(u, v) > 1) {
    const Vertex pu = mapping_.v2p[u];
    const Vertex pv = mapping_.v2p[v];
    const int d = dist_(pu, pv);
    for (Vertex q : hw_.neighbours(pu)) {
      if (dist_(q, pv) == d - 1) {
        const Edge c = make_edge(pu, q);
        apply_swaps(std::span<const Edge>(&c, 1), SwapSource::Escalation);
        ++swaps;
        break;
      }
    }
  }
  return swaps;
}

bool GreedyRouter::has_ready_gate() const {
  for (Vertex u = 0; u < pg_.num_vertices(); ++u) {
    if (partner_[u] > u && cached_distance_[u] == 1) return true;
  }
  return false;
}

void GreedyRouter::reseed_buffer() {
  std::vector<std::pair<int, EdgeId>> pending;
  for (EdgeId id = 0; id < pg_.num_edges(); ++id) {
    if (where_[id] == Where::Interaction) {
      pending.emplace_back(hw_distance(pg_.edge(id).u, pg_.edge(id).v), id);
    }
  }
  std::sort(pending.begin(), pending.end());
  for (const auto &[d, id] : pending) {
    const Edge &e = pg_.edge(id);
    if (partner_[e.u] < 0 && partner_[e.v] < 0) add_to_buffer(id);
  }
}

bool GreedyRouter::step() {
  if (done()) return false;
  ++stats_.iterations;
  const long cap = static_cast<long>(pg_.num_edges() + 1) * (stall_limit_ + 2) + 16;
  if (stats_.iterations > cap) throw Error("router: iteration cap exceeded");

  auto executed = execute_ready_gates();
  if (buffer_size_ == 0 && interaction_size_ > 0) {
    reseed_buffer();
    const auto more = execute_ready_gates();
    executed.insert(executed.end(), more.begin(), more.end());
  }
  maybe_check();
  if (done()) return false;

  update_buffer();
  maybe_check();

  begin_swap_layer();
  const SwapGraph sg = build_swap_graph();
  const auto applied = apply_matched_swaps(match_swaps(sg));
  const auto pairs = paired_zero_swaps();
  if (applied.empty() && pairs.empty() && !has_ready_gate()) fallback_swap();
  maybe_check();

  stall_ = executed.empty() ? stall_ + 1 : 0;
  if (stall_ >= stall_limit_) {
    escalate();
    stall_ = 0;
    maybe_check();
  }
  return !done();
}

RoutedCircuit GreedyRouter::run() {
  while (step()) {
  }
  circuit_.final_mapping = mapping_.v2p;
  circuit_.cancel_adjacent_swaps();
  return circuit_;
}

std::vector<EdgeId> GreedyRouter::buffer() const {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < static_cast<EdgeId>(where_.size()); ++id)
    if (where_[id] == Where::Buffer) out.push_back(id);
  return out;
}

std::vector<EdgeId> GreedyRouter::interaction_set() const {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < static_cast<EdgeId>(where_.size()); ++id)
    if (where_[id] == Where::Interaction) out.push_back(id);
  return out;
}

std::vector<EdgeId> GreedyRouter::executed() const {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < static_cast<EdgeId>(where_.size()); ++id)
    if (where_[id] == Where::Executed) out.push_back(id);
  return out;
}

void GreedyRouter::check_invariants() const {
  auto fail = [](const std::string &what) { throw Error("router invariant: " + what); };
  if (!mapping_.is_bijection()) fail("mapping is not a bijection");

  int in_buffer = 0;
  int in_interaction = 0;
  long total = 0;
  std::vector<int> seen(partner_.size(), 0);
  for (EdgeId id = 0; id < static_cast<EdgeId>(where_.size()); ++id) {
    const Edge &e = pg_.edge(id);
    if (where_[id] == Where::Interaction) ++in_interaction;
    if (where_[id] != Where::Buffer) continue;
    ++in_buffer;
    if (++seen[e.u] > 1 || ++seen[e.v] > 1) fail("buffer is not qubit-disjoint");
    if (partner_[e.u] != e.v || partner_[e.v] != e.u) fail("partner table out of sync");
    const int d = hw_distance(e.u, e.v);
    if (cached_distance_[e.u] != d || cached_distance_[e.v] != d) fail("stale cached distance");
    if (d < 1) fail("buffer gate at distance 0");
    total += d;
  }
  for (std::size_t v = 0; v < partner_.size(); ++v) {
    if (partner_[v] >= 0 && !seen[v]) fail("partner set without buffer gate");
  }
  if (in_buffer != buffer_size_ || in_interaction != interaction_size_) fail("size counters");
  if (total != total_distance_) fail("total distance out of sync");
  if (total < in_buffer) fail("D below buffer size");
}

RoutedCircuit route(const ProblemGraph &pg, const HardwareGraph &hw, const RouterConfig &cfg) {
  const DistanceMatrix dist = all_pairs_distances(hw);
  const InitialPlacement placement = place(pg, hw);
  GreedyRouter router(pg, hw, dist, placement.mapping, placement.sets, cfg);
  return router.run();
}

}  // namespace qroute
