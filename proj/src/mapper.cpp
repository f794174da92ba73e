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

#include "qroute/mapper.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qroute {

Mapping Mapping::identity(int n) {
  Mapping m;
  m.v2p.resize(static_cast<std::size_t>(n));
  std::iota(m.v2p.begin(), m.v2p.end(), 0);
  m.p2v = m.v2p;
  return m;
}

Mapping Mapping::from_v2p(std::vector<Vertex> v2p) {
  Mapping m;
  const int n = static_cast<int>(v2p.size());
  m.p2v.assign(v2p.size(), -1);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = v2p[v];
    if (p < 0 || p >= n || m.p2v[p] != -1) throw Error("mapping is not a bijection");
    m.p2v[p] = v;
  }
  m.v2p = std::move(v2p);
  return m;
}

bool Mapping::is_bijection() const {
  if (v2p.size() != p2v.size()) return false;
  const int n = size();
  for (Vertex v = 0; v < n; ++v) {
    if (v2p[v] < 0 || v2p[v] >= n || p2v[v2p[v]] != v) return false;
  }
  return true;
}

ColorPair select_color_pair(std::span<const std::size_t> class_sizes) {
  std::vector<int> order(class_sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return class_sizes[a] > class_sizes[b]; });
  ColorPair pair;
  if (!order.empty()) pair.first = order[0];
  if (order.size() > 1) pair.second = order[1];
  return pair;
}

ColorPair select_color_pair(const EdgeColoring &col) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(col.num_colors), 0);
  for (int c : col.color) ++sizes.at(c);
  return select_color_pair(sizes);
}

namespace {

struct Link {
  Vertex to = -1;
  LinkKind kind = LinkKind::Junction;
};

// Union of two matchings: every vertex has at most one link of each kind.
class TwoFactor {
 public:
  TwoFactor(int n, std::span<const Edge> first, std::span<const Edge> second)
      : links_(static_cast<std::size_t>(n)) {
    add(first, LinkKind::First);
    add(second, LinkKind::Second);
  }

  [[nodiscard]] const std::vector<Link> &at(Vertex x) const { return links_[x]; }
  [[nodiscard]] int degree(Vertex x) const { return static_cast<int>(links_[x].size()); }

  void remove(Vertex a, Vertex b) {
    auto drop = [](std::vector<Link> &ls, Vertex t) {
      ls.erase(std::remove_if(ls.begin(), ls.end(), [t](const Link &l) { return l.to == t; }),
               ls.end());
    };
    drop(links_[a], b);
    drop(links_[b], a);
  }

 private:
  void add(std::span<const Edge> edges, LinkKind kind) {
    const int n = static_cast<int>(links_.size());
    for (const Edge &e : edges) {
      if (e.u < 0 || e.v >= n || e.u == e.v) throw Error("chain: edge out of range");
      for (Vertex x : {e.u, e.v}) {
        for (const Link &l : links_[x]) {
          if (l.kind == kind) throw Error("chain: color class is not a matching");
          if (l.to == other_end(e, x)) throw Error("chain: edge present in both classes");
        }
      }
      links_[e.u].push_back({e.v, kind});
      links_[e.v].push_back({e.u, kind});
    }
  }

  std::vector<std::vector<Link>> links_;
};

struct Component {
  std::vector<Vertex> vertices;
  std::vector<LinkKind> links;
  Vertex smallest = 0;
};

// Walks a path component from one of its endpoints.
Component walk(const TwoFactor &tf, Vertex start, std::vector<char> &seen) {
  Component comp;
  comp.vertices.push_back(start);
  seen[start] = 1;
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    const Link *next = nullptr;
    for (const Link &l : tf.at(cur)) {
      if (l.to != prev && !seen[l.to]) next = &l;
    }
    if (next == nullptr) break;
    comp.links.push_back(next->kind);
    comp.vertices.push_back(next->to);
    seen[next->to] = 1;
    prev = cur;
    cur = next->to;
  }
  comp.smallest = *std::min_element(comp.vertices.begin(), comp.vertices.end());
  return comp;
}

}  // namespace

Chain build_chain(int n, std::span<const Edge> first, std::span<const Edge> second) {
  TwoFactor tf(n, first, second);
  Chain chain;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);

  // Cut every cycle at its smallest second-class edge.
  {
    std::vector<char> probe(static_cast<std::size_t>(n), 0);
    for (Vertex x = 0; x < n; ++x) {
      if (probe[x] || tf.degree(x) != 2) continue;
      std::vector<Vertex> members;
      bool is_cycle = true;
      std::vector<Vertex> stack{x};
      probe[x] = 1;
      while (!stack.empty()) {
        const Vertex y = stack.back();
        stack.pop_back();
        members.push_back(y);
        if (tf.degree(y) != 2) is_cycle = false;
        for (const Link &l : tf.at(y)) {
          if (!probe[l.to]) {
            probe[l.to] = 1;
            stack.push_back(l.to);
          }
        }
      }
      if (!is_cycle) continue;
      std::optional<Edge> cut;
      for (Vertex y : members) {
        for (const Link &l : tf.at(y)) {
          if (l.kind != LinkKind::Second) continue;
          const Edge e = make_edge(y, l.to);
          if (!cut || e < *cut) cut = e;
        }
      }
      tf.remove(cut->u, cut->v);
      chain.leftover.push_back(*cut);
    }
  }

  std::vector<Component> comps;
  for (Vertex x = 0; x < n; ++x) {
    if (!seen[x] && tf.degree(x) <= 1) comps.push_back(walk(tf, x, seen));
  }
  std::stable_sort(comps.begin(), comps.end(), [](const Component &a, const Component &b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
    return a.smallest < b.smallest;
  });

  for (const Component &c : comps) {
    if (!chain.vertices.empty()) chain.links.push_back(LinkKind::Junction);
    chain.vertices.insert(chain.vertices.end(), c.vertices.begin(), c.vertices.end());
    chain.links.insert(chain.links.end(), c.links.begin(), c.links.end());
  }
  std::sort(chain.leftover.begin(), chain.leftover.end());
  return chain;
}

namespace {

class PathSearch {
 public:
  PathSearch(const HardwareGraph &hw, long budget)
      : hw_(hw), budget_(budget), seen_(static_cast<std::size_t>(hw.num_vertices()), 0) {
    for (Vertex p = 0; p < hw.num_vertices(); ++p) adj_.push_back(hw.neighbours(p));
  }

  std::optional<std::vector<Vertex>> from(Vertex start) {
    path_.assign(1, start);
    std::fill(seen_.begin(), seen_.end(), 0);
    seen_[start] = 1;
    if (extend()) return path_;
    return std::nullopt;
  }

  [[nodiscard]] bool exhausted() const { return budget_ <= 0; }

 private:
  int unvisited_degree(Vertex p) const {
    int d = 0;
    for (Vertex q : adj_[p]) d += seen_[q] ? 0 : 1;
    return d;
  }

  // Depth-first extension, most constrained neighbour first.
  bool extend() {
    if (static_cast<int>(path_.size()) == hw_.num_vertices()) return true;
    if (--budget_ <= 0) return false;
    std::vector<Vertex> next;
    for (Vertex q : adj_[path_.back()])
      if (!seen_[q]) next.push_back(q);
    std::stable_sort(next.begin(), next.end(), [this](Vertex a, Vertex b) {
      return unvisited_degree(a) < unvisited_degree(b);
    });
    for (Vertex q : next) {
      seen_[q] = 1;
      path_.push_back(q);
      if (extend()) return true;
      path_.pop_back();
      seen_[q] = 0;
      if (budget_ <= 0) return false;
    }
    return false;
  }

  const HardwareGraph &hw_;
  long budget_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> seen_;
  std::vector<Vertex> path_;
};

}  // namespace

std::vector<Vertex> hamiltonian_path(const HardwareGraph &hw) {
  if (const auto &declared = hw.declared_path()) return *declared;
  const int m = hw.num_vertices();
  if (m == 0) return {};

  std::vector<Vertex> starts(static_cast<std::size_t>(m));
  std::iota(starts.begin(), starts.end(), 0);
  std::stable_sort(starts.begin(), starts.end(),
                   [&hw](Vertex a, Vertex b) { return hw.degree(a) < hw.degree(b); });
  PathSearch search(hw, 200000L + 100L * m * m);
  for (Vertex s : starts) {
    if (auto path = search.from(s)) return *path;
    if (search.exhausted()) break;
  }
  throw Error("no Hamiltonian path found");
}

Mapping embed_chain(const Chain &chain, std::span<const Vertex> path) {
  if (chain.vertices.size() != path.size()) {
    throw Error("chain covers " + std::to_string(chain.vertices.size()) +
                " qubits but the path has " + std::to_string(path.size()));
  }
  std::vector<Vertex> v2p(path.size(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = chain.vertices[i];
    if (v < 0 || v >= static_cast<Vertex>(v2p.size()) || v2p[v] != -1) {
      throw Error("chain is not a permutation of the virtual qubits");
    }
    v2p[v] = path[i];
  }
  return Mapping::from_v2p(std::move(v2p));
}

GateSets init_sets(const ProblemGraph &pg, const Chain &chain) {
  std::vector<char> in_buffer(static_cast<std::size_t>(pg.num_edges()), 0);
  GateSets sets;
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    if (chain.links[i] == LinkKind::Junction) continue;
    const auto id = pg.edge_id(chain.vertices[i], chain.vertices[i + 1]);
    if (!id) throw Error("chain link is not a problem edge");
    if (chain.links[i] == LinkKind::First) {
      in_buffer[*id] = 1;
    } else {
      sets.second_layer.push_back(*id);
    }
  }
  for (EdgeId id = 0; id < pg.num_edges(); ++id) {
    (in_buffer[id] ? sets.buffer : sets.interaction).push_back(id);
  }
  std::sort(sets.second_layer.begin(), sets.second_layer.end());
  return sets;
}

InitialPlacement place(const ProblemGraph &pg, const HardwareGraph &hw) {
  if (pg.num_vertices() != hw.num_vertices()) {
    throw Error("qubit count mismatch: problem has " + std::to_string(pg.num_vertices()) +
                " virtual qubits, hardware has " + std::to_string(hw.num_vertices()));
  }
  InitialPlacement out;
  out.coloring = edge_coloring(pg);
  out.colors = select_color_pair(out.coloring);

  std::vector<Edge> first;
  std::vector<Edge> second;
  for (EdgeId id = 0; id < pg.num_edges(); ++id) {
    const int c = out.coloring.color[id];
    if (out.colors.first && c == *out.colors.first) first.push_back(pg.edge(id));
    if (out.colors.second && c == *out.colors.second) second.push_back(pg.edge(id));
  }
  out.chain = build_chain(pg.num_vertices(), first, second);
  out.path = hamiltonian_path(hw);
  out.mapping = embed_chain(out.chain, out.path);
  out.sets = init_sets(pg, out.chain);
  return out;
}

}  // namespace qroute
