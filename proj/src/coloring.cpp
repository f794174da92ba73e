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

#include "qroute/coloring.hpp"

#include <algorithm>
#include <unordered_set>

namespace qroute {
namespace {

constexpr int kNone = -1;

// Misra-Gries state: color per edge plus, for every vertex, the neighbour
// reached through each color.
class MisraGries {
 public:
  explicit MisraGries(const SimpleGraph &g)
      : g_(g),
        palette_(g.max_degree() + 1),
        color_(static_cast<std::size_t>(g.num_edges()), kNone),
        via_(static_cast<std::size_t>(g.num_vertices()) * palette_, kNone) {}

  std::vector<int> run() {
    for (EdgeId id = 0; id < g_.num_edges(); ++id) color_edge(id);
    return color_;
  }

 private:
  Vertex &via(Vertex x, int c) { return via_[static_cast<std::size_t>(x) * palette_ + c]; }
  bool is_free(Vertex x, int c) { return via(x, c) == kNone; }

  int first_free(Vertex x) {
    for (int c = 0; c < palette_; ++c)
      if (is_free(x, c)) return c;
    throw Error("edge coloring: palette exhausted");  // unreachable: deg(x) < palette
  }

  int color_between(Vertex a, Vertex b) const { return color_[*g_.edge_id(a, b)]; }

  void set_color(Vertex a, Vertex b, int c) {
    color_[*g_.edge_id(a, b)] = c;
    via(a, c) = b;
    via(b, c) = a;
  }

  void clear_color(Vertex a, Vertex b) {
    const EdgeId id = *g_.edge_id(a, b);
    const int c = color_[id];
    if (c == kNone) return;
    via(a, c) = kNone;
    via(b, c) = kNone;
    color_[id] = kNone;
  }

  // Maximal fan of u starting at v: each later member's edge color is free
  // on the previous member.
  std::vector<Vertex> maximal_fan(Vertex u, Vertex v) {
    std::vector<Vertex> fan{v};
    std::vector<char> in_fan(static_cast<std::size_t>(g_.num_vertices()), 0);
    in_fan[v] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      const Vertex last = fan.back();
      for (int c = 0; c < palette_; ++c) {
        const Vertex w = via(u, c);
        if (w != kNone && !in_fan[w] && is_free(last, c)) {
          fan.push_back(w);
          in_fan[w] = 1;
          grew = true;
          break;
        }
      }
    }
    return fan;
  }

  // Swap colors c and d along the alternating path leaving u on a d edge.
  void invert_path(Vertex u, int c, int d) {
    struct Step {
      Vertex a, b;
      int color;
    };
    std::vector<Step> path;
    Vertex cur = u;
    int want = d;
    while (true) {
      const Vertex next = via(cur, want);
      if (next == kNone) break;
      path.push_back({cur, next, want});
      cur = next;
      want = (want == d) ? c : d;
    }
    for (const Step &s : path) clear_color(s.a, s.b);
    for (const Step &s : path) set_color(s.a, s.b, s.color == d ? c : d);
  }

  void color_edge(EdgeId id) {
    const Vertex u = g_.edge(id).u;
    const Vertex v = g_.edge(id).v;
    // A color free at both ends needs no recoloring.
    for (int c = 0; c < palette_; ++c) {
      if (is_free(u, c) && is_free(v, c)) {
        set_color(u, v, c);
        return;
      }
    }
    const std::vector<Vertex> fan = maximal_fan(u, v);
    const int c = first_free(u);
    const int d = first_free(fan.back());
    if (c != d) invert_path(u, c, d);

    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0 && !is_free(fan[i - 1], color_between(u, fan[i]))) break;
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw Error("edge coloring: no rotatable fan prefix");

    for (std::size_t i = 0; i < w; ++i) {
      const int shifted = color_between(u, fan[i + 1]);
      clear_color(u, fan[i + 1]);
      set_color(u, fan[i], shifted);
    }
    set_color(u, fan[w], d);
  }

  const SimpleGraph &g_;
  int palette_;
  std::vector<int> color_;
  std::vector<Vertex> via_;
};

}  // namespace

std::vector<std::vector<EdgeId>> EdgeColoring::classes() const {
  std::vector<std::vector<EdgeId>> out(static_cast<std::size_t>(num_colors));
  for (EdgeId id = 0; id < static_cast<EdgeId>(color.size()); ++id) {
    out.at(color[id]).push_back(id);
  }
  return out;
}

EdgeColoring edge_coloring(const SimpleGraph &g) {
  EdgeColoring out;
  if (g.num_edges() == 0) return out;
  std::vector<int> raw = MisraGries(g).run();

  std::vector<int> relabel(static_cast<std::size_t>(g.max_degree() + 1), kNone);
  out.color.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (relabel[raw[i]] == kNone) relabel[raw[i]] = out.num_colors++;
    out.color[i] = relabel[raw[i]];
  }
  return out;
}

bool is_proper_coloring(const SimpleGraph &g, const EdgeColoring &col) {
  if (static_cast<int>(col.color.size()) != g.num_edges()) return false;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    std::vector<int> seen;
    for (EdgeId id : g.incident(x)) {
      const int c = col.color[id];
      if (c < 0 || c >= col.num_colors) return false;
      seen.push_back(c);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

std::vector<Edge> maximal_matching(std::span<const Edge> edges) {
  std::vector<Edge> matched;
  std::unordered_set<Vertex> used;
  for (const Edge &e : edges) {
    if (e.u == e.v || used.contains(e.u) || used.contains(e.v)) continue;
    matched.push_back(e);
    used.insert(e.u);
    used.insert(e.v);
  }
  return matched;
}

}  // namespace qroute
