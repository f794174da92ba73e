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
#include <string>

#include "qroute/circuit.hpp"
#include "qroute/graph.hpp"

namespace qroute {

/// Exact non-negative rational p/q in lowest terms, q > 0.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    normalise();
  }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / den_; }
  /// "176", "661.5", or "p/q" when not a terminating decimal of at most 6 places.
  [[nodiscard]] std::string str() const;

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  constexpr void normalise() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t a = num_ < 0 ? -num_ : num_;
    std::int64_t b = den_;
    while (b != 0) {
      const std::int64_t t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num_ /= a;
      den_ /= a;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

enum class SwapNetwork { Linear, KRegular, Grid };

const char *network_name(SwapNetwork net);

/// Closed-form depth and SWAP count of a SWAP network.
struct BoundEstimate {
  Rational depth;
  Rational swaps;
  SwapNetwork network = SwapNetwork::Linear;
};

/// Odd-even transposition network on a line: 2N-2 depth, N^2/2 - 3N/2 + 1 swaps. N >= 2.
BoundEstimate linear_sn_bounds(std::int64_t n);

/// k-regular grid network: 3(k-1)sqrt(N) - 2k + 4 depth,
/// 3(k-1)(N^{3/2}/2 - 3N/2 + sqrt(N)) swaps. N a perfect square >= 4, k >= 1.
BoundEstimate kreg_sn_bounds(std::int64_t n, std::int64_t k);

/// Square-grid network: 3N/2 + 3sqrt(N) + 3/2 depth,
/// (N/2 + sqrt(N) + 1/2)(N/2 - sqrt(N)) swaps. N a perfect square >= 4.
BoundEstimate grid_sn_bounds(std::int64_t n);

/**
 * Routes `pg` with the linear odd-even SWAP network along a Hamiltonian path
 * of `hw`, starting from the mapper's chain embedding.
 *
 * Round 0 executes every pending gate on an adjacent pair (odd positions,
 * then even). Round t then executes the pending gates on positions (i, i+1)
 * with i = t mod 2 and swaps those positions, so each pair of qubits meets
 * right before it crosses. Rounds stop as soon as every problem edge has
 * executed, and trailing swaps that no later gate depends on are dropped.
 */
RoutedCircuit linear_sn_route(const ProblemGraph &pg, const HardwareGraph &hw);

}  // namespace qroute
