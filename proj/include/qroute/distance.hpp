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

#include <cstddef>
#include <vector>

#include "qroute/graph.hpp"

namespace qroute {

/// All-pairs hop counts over the couplers of a connected hardware graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int m, std::vector<int> table) : m_(m), table_(std::move(table)) {}

  [[nodiscard]] int size() const noexcept { return m_; }
  [[nodiscard]] int operator()(Vertex a, Vertex b) const {
    return table_[static_cast<std::size_t>(a) * m_ + b];
  }
  [[nodiscard]] int diameter() const;

 private:
  int m_ = 0;
  std::vector<int> table_;
};

/// One BFS per source. Throws if `hw` is disconnected.
DistanceMatrix all_pairs_distances(const HardwareGraph &hw);

}  // namespace qroute
