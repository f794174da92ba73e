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
#include <set>

#include "oracles.hpp"
#include "qroute/distance.hpp"
#include "qroute/generators.hpp"
#include "qroute/router.hpp"
#include "qroute/verifier.hpp"

namespace qroute {
namespace {

/// A hand-built router state: identity mapping, explicit buffer.
struct Fixture {
  ProblemGraph pg;
  HardwareGraph hw;
  DistanceMatrix dist;
  std::vector<std::vector<int>> fw;

  Fixture(HardwareGraph hardware, const std::vector<Edge> &edges)
      : pg(hardware.num_vertices()), hw(std::move(hardware)) {
    for (const Edge &e : edges) pg.add_edge(e.u, e.v);
    dist = all_pairs_distances(hw);
    fw = oracle::floyd_warshall(hw);
  }

  GreedyRouter router(std::vector<EdgeId> buffer, RouterConfig cfg = {},
                      std::vector<EdgeId> second = {}) const {
    GateSets sets;
    sets.buffer = buffer;
    for (EdgeId id = 0; id < pg.num_edges(); ++id)
      if (std::find(buffer.begin(), buffer.end(), id) == buffer.end()) sets.interaction.push_back(id);
    sets.second_layer = std::move(second);
    cfg.check_invariants = true;
    return GreedyRouter(pg, hw, dist, Mapping::identity(pg.num_vertices()), sets, cfg);
  }

  /// D recomputed from scratch.
  long D(const GreedyRouter &r) const {
    std::vector<Edge> pairs;
    for (EdgeId id : r.buffer()) pairs.push_back(pg.edge(id));
    return oracle::total_distance(fw, r.mapping().v2p, pairs);
  }
};

}  // namespace

TEST_CASE("swap_score") {
  SECTION("one buffer qubit moves closer") {
    Fixture f(path_hardware(4), {{0, 3}});
    auto r = f.router({0});
    CHECK(r.swap_score(0, 1) == 1);
    CHECK(r.swap_score(2, 3) == 1);
    CHECK_FALSE(r.swap_score(1, 2).has_value());
    CHECK_THROWS_AS(r.swap_score(0, 2), Error);
  }
  SECTION("both buffer qubits move closer") {
    Fixture f(path_hardware(4), {{0, 2}, {1, 3}});
    auto r = f.router({0, 1});
    CHECK(r.swap_score(1, 2) == 2);
    CHECK(r.swap_score(0, 1) == 0);
    CHECK(r.swap_score(2, 3) == 0);
  }
  SECTION("agrees with recomputing D for every coupler") {
    const auto pg = gen_k_regular(16, 3, 4);
    const auto hw = square_grid(4);
    const auto dist = all_pairs_distances(hw);
    const auto fw = oracle::floyd_warshall(hw);
    const auto pl = place(pg, hw);
    // Scramble the mapping so distances are interesting.
    std::vector<Vertex> v2p(16);
    for (int v = 0; v < 16; ++v) v2p[v] = (v * 7 + 3) % 16;
    GreedyRouter r(pg, hw, dist, Mapping::from_v2p(v2p), pl.sets);
    std::vector<Edge> pairs;
    for (EdgeId id : r.buffer()) pairs.push_back(pg.edge(id));
    const long d0 = oracle::total_distance(fw, v2p, pairs);
    CHECK(d0 == r.total_distance());
    const auto sg = r.build_swap_graph();
    for (const Edge &c : hw.edges()) {
      auto m = Mapping::from_v2p(v2p);
      m.swap_physical(c.u, c.v);
      const long expected = d0 - oracle::total_distance(fw, m.v2p, pairs);
      const auto s = r.swap_score(c.u, c.v);
      if (s) CHECK(*s == expected);
      const bool in_graph = std::any_of(sg.edges.begin(), sg.edges.end(),
                                        [&](const ScoredCoupler &x) { return x.coupler == c; });
      CHECK(in_graph == (s && *s >= 1));
    }
  }
}

TEST_CASE("execute_ready_gates") {
  SECTION("nothing adjacent") {
    Fixture f(path_hardware(4), {{0, 2}, {1, 3}});
    auto r = f.router({0, 1});
    CHECK(r.execute_ready_gates().empty());
    CHECK(r.buffer().size() == 2);
    CHECK(r.circuit().metrics().depth == 0);
  }
  SECTION("single adjacent gate") {
    Fixture f(path_hardware(4), {{0, 1}, {0, 3}});
    auto r = f.router({0});
    CHECK(r.execute_ready_gates() == std::vector<EdgeId>{0});
    CHECK(r.executed() == std::vector<EdgeId>{0});
    // Refill pulls the remaining gate of the freed qubit in.
    CHECK(r.buffer() == std::vector<EdgeId>{1});
    CHECK(r.interaction_set().empty());
  }
  SECTION("the seeded class executes in the first layer") {
    const auto pg = gen_k_regular(9, 4, 3);
    const auto hw = square_grid(3);
    const auto dist = all_pairs_distances(hw);
    const auto pl = place(pg, hw);
    GreedyRouter r(pg, hw, dist, pl.mapping, pl.sets);
    const auto done = r.execute_ready_gates();
    for (EdgeId id : pl.sets.buffer)
      CHECK(std::find(done.begin(), done.end(), id) != done.end());
    REQUIRE_FALSE(r.circuit().layers().empty());
    CHECK(r.circuit().layers()[0].gates.size() == pl.sets.buffer.size());
  }
}

TEST_CASE("apply_matched_swaps") {
  SECTION("two disjoint +2 swaps lower D by 4") {
    Fixture f(path_hardware(8), {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
    auto r = f.router({0, 1, 2, 3});
    CHECK(f.D(r) == 8);
    const std::vector<Edge> matching{{1, 2}, {5, 6}};
    CHECK(r.apply_matched_swaps(matching) == matching);
    CHECK(f.D(r) == 4);
    CHECK(r.total_distance() == 4);
  }
  SECTION("an earlier swap neutralises a later one") {
    Fixture f(square_grid(2), {{0, 3}});
    auto r = f.router({0});
    const std::vector<Edge> matching{{0, 1}, {2, 3}};
    CHECK(r.swap_score(2, 3) == 1);
    CHECK(r.apply_matched_swaps(matching) == std::vector<Edge>{{0, 1}});
    CHECK(f.D(r) == 1);
  }
  SECTION("empty matching") {
    Fixture f(path_hardware(3), {{0, 2}});
    auto r = f.router({0});
    CHECK(r.apply_matched_swaps({}).empty());
    CHECK(r.circuit().metrics().swap_count == 0);
  }
  SECTION("matching order: score first, then coupler") {
    Fixture f(path_hardware(6), {{0, 2}, {1, 3}, {4, 5}});
    auto r = f.router({0, 1});
    SwapGraph sg;
    sg.edges = {{{0, 1}, 1}, {{2, 3}, 1}, {{1, 2}, 2}};
    CHECK(r.match_swaps(sg) == std::vector<Edge>{{1, 2}});
  }
}

TEST_CASE("paired_zero_swaps") {
  // 4x4 grid, row 0 at the bottom. Pair (0,3) spans row 0; qubits 4 and 7
  // sit above its ends and want to move down towards 1 and 2.
  Fixture f(square_grid(4), {{0, 3}, {1, 4}, {2, 7}});

  SECTION("0/0 alone, +2 together") {
    auto r = f.router({0, 1, 2});
    CHECK(r.swap_score(0, 4) == 0);
    CHECK(r.swap_score(3, 7) == 0);
    const std::vector<Edge> both{{0, 4}, {3, 7}};
    CHECK(r.joint_score(both) == 2);
    CHECK(f.D(r) == 7);
    r.begin_swap_layer();
    const auto pairs = r.paired_zero_swaps();
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::make_pair(Edge{0, 4}, Edge{3, 7}));
    CHECK(f.D(r) == 5);
    CHECK(r.circuit().metrics().swap_count == 2);
    CHECK(r.circuit().metrics().depth == 1);
  }
  SECTION("skipped when one of the four qubits already swapped") {
    auto r = f.router({0, 1, 2});
    r.begin_swap_layer();
    REQUIRE(r.apply_matched_swaps(std::vector<Edge>{{4, 5}}).size() == 1);
    CHECK(r.paired_zero_swaps().empty());
  }
  SECTION("disabled by flag") {
    RouterConfig cfg;
    cfg.enable_paired_zero_swaps = false;
    auto r = f.router({0, 1, 2}, cfg);
    r.begin_swap_layer();
    CHECK(r.paired_zero_swaps().empty());
    CHECK(f.D(r) == 7);
  }
  SECTION("no-op off the grid") {
    Fixture p(path_hardware(4), {{0, 3}});
    auto r = p.router({0});
    r.begin_swap_layer();
    CHECK(r.paired_zero_swaps().empty());
  }
}

TEST_CASE("fallback_swap") {
  // Path 0-1-2-3 with pairs (0,2) and (1,3): (0,1) and (2,3) each move one
  // buffer qubit closer and the other away.
  Fixture f(path_hardware(4), {{0, 2}, {1, 3}});
  std::set<std::pair<Vertex, Vertex>> picked;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    RouterConfig cfg;
    cfg.seed = seed;
    auto r = f.router({0, 1}, cfg);
    const long before = f.D(r);
    const auto c = r.fallback_swap();
    REQUIRE(c);
    CHECK((*c == Edge{0, 1} || *c == Edge{2, 3}));
    CHECK(f.D(r) == before);
    picked.emplace(c->u, c->v);

    auto again = f.router({0, 1}, cfg);
    CHECK(again.fallback_swap() == c);
  }
  CHECK(picked.size() == 2);

  SECTION("no zero-score move") {
    Fixture g(path_hardware(3), {{0, 2}});
    auto r = g.router({0});
    CHECK_THROWS_AS(r.fallback_swap(), Error);
  }
}

TEST_CASE("escalate walks the nearest gate together") {
  Fixture f(path_hardware(6), {{0, 5}, {1, 2}, {3, 4}});
  auto r = f.router({0});
  CHECK(r.escalate() == 4);
  CHECK(f.fw[r.mapping().v2p[0]][r.mapping().v2p[5]] == 1);
  CHECK(r.mapping().v2p[5] == 5);
}

TEST_CASE("update_buffer") {
  SECTION("a strictly closer neighbour replaces the partner") {
    Fixture f(path_hardware(8), {{0, 5}, {0, 1}});
    auto r = f.router({0});
    const auto reps = r.update_buffer();
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].removed == 0);
    CHECK(reps[0].added == 1);
    CHECK(r.buffer() == std::vector<EdgeId>{1});
    CHECK(r.interaction_set() == std::vector<EdgeId>{0});
  }
  SECTION("ties go to the lower virtual id") {
    Fixture f(path_hardware(8), {{3, 7}, {3, 4}, {2, 3}});
    auto r = f.router({0});
    const auto reps = r.update_buffer();
    REQUIRE(reps.size() == 1);
    CHECK(f.pg.edge(reps[0].added) == Edge{2, 3});
  }
  SECTION("partners already in the buffer are unavailable") {
    Fixture f(path_hardware(8), {{0, 5}, {1, 2}, {0, 1}});
    auto r = f.router({0, 1});
    CHECK(r.update_buffer().empty());
    CHECK(r.buffer() == std::vector<EdgeId>{0, 1});
  }
  SECTION("no candidate is not closer") {
    Fixture f(path_hardware(8), {{0, 2}, {0, 5}});
    auto r = f.router({0});
    CHECK(r.update_buffer().empty());
  }
}

TEST_CASE("refill_on_removal") {
  SECTION("nearest gate enters") {
    Fixture f(path_hardware(9), {{1, 4}, {4, 5}, {4, 8}});
    auto r = f.router({});
    const Vertex freed[] = {4};
    CHECK(r.refill_on_removal(freed) == std::vector<EdgeId>{1});
    CHECK(r.partner(4) == 5);
  }
  SECTION("nothing left for the freed qubit") {
    Fixture f(path_hardware(4), {{1, 2}});
    auto r = f.router({});
    const Vertex freed[] = {0};
    CHECK(r.refill_on_removal(freed).empty());
  }
  SECTION("a shared candidate is added once") {
    Fixture f(path_hardware(4), {{1, 2}});
    auto r = f.router({});
    const Vertex freed[] = {1, 2};
    CHECK(r.refill_on_removal(freed) == std::vector<EdgeId>{0});
    CHECK(r.buffer() == std::vector<EdgeId>{0});
  }
  SECTION("second-layer gates win distance ties") {
    Fixture f(path_hardware(5), {{1, 2}, {2, 3}});
    auto r = f.router({}, {}, {1});
    const Vertex freed[] = {2};
    CHECK(r.refill_on_removal(freed) == std::vector<EdgeId>{1});
  }
}

TEST_CASE("route") {
  SECTION("perfect matching on path hardware") {
    ProblemGraph pg(6);
    pg.add_edge(0, 5);
    pg.add_edge(1, 3);
    pg.add_edge(2, 4);
    const auto hw = path_hardware(6);
    const auto c = route(pg, hw);
    CHECK(c.metrics().swap_count == 0);
    CHECK(c.metrics().depth == 1);
    CHECK(verify(c, pg, hw).ok);
  }
  SECTION("K4 on complete hardware") {
    const auto pg = gen_k_regular(4, 3, 0);
    const auto hw = complete_hardware(4);
    const auto c = route(pg, hw);
    CHECK(c.metrics().swap_count == 0);
    CHECK(c.metrics().depth == 3);
    CHECK(verify(c, pg, hw).ok);
  }
  SECTION("9-qubit 4-regular on a 3x3 grid") {
    const auto pg = gen_k_regular(9, 4, 3);
    const auto hw = square_grid(3);
    const auto c = route(pg, hw);
    CHECK(c.metrics().rzz_count == 18);
    CHECK(verify(c, pg, hw).ok);
  }
  SECTION("empty problem graph") {
    const auto c = route(ProblemGraph(4), square_grid(2));
    CHECK(c.metrics().depth == 0);
    CHECK(c.final_mapping == c.initial_mapping);
  }
  SECTION("errors") {
    CHECK_THROWS_WITH(route(gen_k_regular(9, 4, 0), square_grid(2)),
                      Catch::Matchers::ContainsSubstring("qubit count mismatch"));
    HardwareGraph split(4);
    split.add_coupler(0, 1);
    split.add_coupler(2, 3);
    CHECK_THROWS_WITH(route(gen_k_regular(4, 1, 0), split),
                      Catch::Matchers::ContainsSubstring("disconnected"));
  }
}

}  // namespace qroute
