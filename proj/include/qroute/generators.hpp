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

#include "qroute/graph.hpp"

namespace qroute {

/// Random simple k-regular graph on n vertices, deterministic in `seed`.
/// Throws if n*k is odd, k >= n, or k < 0.
ProblemGraph gen_k_regular(int n, int k, std::uint64_t seed);

/// G(n, p): every pair included independently with probability p.
ProblemGraph gen_erdos_renyi(int n, double p, std::uint64_t seed);

/// L x L square-grid QPU with its snake Hamiltonian path declared.
HardwareGraph square_grid(int side);

/// Path hardware 0-1-...-(m-1).
HardwareGraph path_hardware(int m);

/// Complete hardware graph on m qubits.
HardwareGraph complete_hardware(int m);

}  // namespace qroute
