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

#include "qroute/baselines.hpp"

#include <string>

#include "qroute/mapper.hpp"

namespace qroute {
namespace {

std::int64_t exact_sqrt(std::int64_t n) {
  std::int64_t s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s * s == n ? s : -1;
}

}  // namespace

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t scale = 1;
  int places = 0;
  while (places < 6 && (scale % den_) != 0) {
    scale *= 10;
    ++places;
  }
  if (scale % den_ != 0) return std::to_string(num_) + "/" + std::to_string(den_);
  const std::int64_t scaled = num_ * (scale / den_);
  const std::int64_t mag = scaled < 0 ? -scaled : scaled;
  std::string frac = std::to_string(mag % scale);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return (scaled < 0 ? "-" : "") + std::to_string(mag / scale) + "." + frac;
}

const char *network_name(SwapNetwork net) {
  switch (net) {
    case SwapNetwork::Linear: return "linear";
    case SwapNetwork::KRegular: return "kreg";
    case SwapNetwork::Grid: return "grid";
  }
  return "?";
}

BoundEstimate linear_sn_bounds(std::int64_t n) {
  if (n < 2) throw Error("linear SWAP network bounds need N >= 2");
  return {Rational(2 * n - 2), Rational(n * n - 3 * n + 2, 2), SwapNetwork::Linear};
}

BoundEstimate kreg_sn_bounds(std::int64_t n, std::int64_t k) {
  const std::int64_t s = exact_sqrt(n);
  if (n < 4 || s < 0) throw Error("k-regular SWAP network bounds need a square N >= 4");
  if (k < 1) throw Error("k-regular SWAP network bounds need k >= 1");
  const Rational depth = Rational(3 * (k - 1) * s) - Rational(2 * k) + Rational(4);
  const Rational swaps =
      Rational(3 * (k - 1)) * (Rational(n * s, 2) - Rational(3 * n, 2) + Rational(s));
  return {depth, swaps, SwapNetwork::KRegular};
}

BoundEstimate grid_sn_bounds(std::int64_t n) {
  const std::int64_t s = exact_sqrt(n);
  if (n < 4 || s < 0) throw Error("grid SWAP network bounds need a square N >= 4");
  const Rational depth = Rational(3 * n, 2) + Rational(3 * s) + Rational(3, 2);
  const Rational swaps = (Rational(n, 2) + Rational(s) + Rational(1, 2)) * (Rational(n, 2) - Rational(s));
  return {depth, swaps, SwapNetwork::Grid};
}

RoutedCircuit linear_sn_route(const ProblemGraph &pg, const HardwareGraph &hw) {
  const InitialPlacement placement = place(pg, hw);
  const std::vector<Vertex> &path = placement.path;
  const int n = pg.num_vertices();

  RoutedCircuit circuit(n);
  circuit.initial_mapping = placement.mapping.v2p;
  Mapping current = placement.mapping;
  std::vector<char> pending(static_cast<std::size_t>(pg.num_edges()), 1);
  int remaining = pg.num_edges();

  auto execute = [&](int i) {
    const Vertex x = current.p2v[path[i]];
    const Vertex y = current.p2v[path[i + 1]];
    const auto id = pg.edge_id(x, y);
    if (!id || !pending[*id]) return;
    circuit.append(Gate::rzz(path[i], path[i + 1], pg.edge(*id)));
    pending[*id] = 0;
    --remaining;
  };

  for (int round = 0; remaining > 0; ++round) {
    // Every pair crosses exactly once, right when it is swapped, so after the
    // opening round only the pairs about to be swapped need checking.
    if (round == 0) {
      for (int i = 1; i + 1 < n; i += 2) execute(i);
    }
    for (int i = round % 2; i + 1 < n; i += 2) execute(i);
    if (remaining == 0) break;
    // n rounds reverse the line, so every pair has met by then.
    if (round >= n) throw Error("linear SWAP network failed to cover all pairs");
    for (int i = round % 2; i + 1 < n; i += 2) {
      circuit.append(Gate::swap(path[i], path[i + 1]));
      current.swap_physical(path[i], path[i + 1]);
    }
  }
  circuit.final_mapping = current.v2p;
  circuit.drop_trailing_swaps();
  return circuit;
}

}  // namespace qroute
