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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qroute/graph.hpp"

namespace qroute {

/// Malformed edge-list input; `line()` is 1-based (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string &detail, const std::string &source = "")
      : Error((source.empty() ? "" : source + ": ") +
              (line > 0 ? "line " + std::to_string(line) + ": " : "") + detail),
        line_(line),
        detail_(detail) {}
  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] const std::string &detail() const noexcept { return detail_; }

 private:
  int line_;
  std::string detail_;
};

/// Raw contents of an edge-list file.
///
///   # comment
///   n m
///   u v [weight]      (m lines)
///   path: v0 v1 ...   (optional, hardware only)
struct EdgeListFile {
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::optional<std::vector<Vertex>> path;
};

EdgeListFile parse_edge_list(std::istream &in);

ProblemGraph to_problem_graph(const EdgeListFile &file);
HardwareGraph to_hardware_graph(const EdgeListFile &file);

ProblemGraph read_problem_graph(const std::string &filename);
HardwareGraph read_hardware_graph(const std::string &filename);

void write_edge_list(std::ostream &out, const ProblemGraph &g);
void write_edge_list(std::ostream &out, const HardwareGraph &g);

}  // namespace qroute
