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

#include "qroute/distance.hpp"

#include <algorithm>
#include <queue>

namespace qroute {

int DistanceMatrix::diameter() const {
  return table_.empty() ? 0 : *std::max_element(table_.begin(), table_.end());
}

DistanceMatrix all_pairs_distances(const HardwareGraph &hw) {
  const int m = hw.num_vertices();
  std::vector<int> table(static_cast<std::size_t>(m) * m, -1);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(m));
  for (Vertex p = 0; p < m; ++p) adj[p] = hw.neighbours(p);

  std::queue<Vertex> frontier;
  for (Vertex src = 0; src < m; ++src) {
    int *row = table.data() + static_cast<std::size_t>(src) * m;
    row[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      for (Vertex y : adj[x]) {
        if (row[y] < 0) {
          row[y] = row[x] + 1;
          frontier.push(y);
        }
      }
    }
    if (std::find(row, row + m, -1) != row + m) {
      throw Error("hardware graph is disconnected");
    }
  }
  return DistanceMatrix(m, std::move(table));
}

}  // namespace qroute
