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

#include "qroute/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qroute {
namespace {

std::string strip_comment(const std::string &line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string &s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

template <typename T>
bool read_exact(std::istringstream &in, T &value) {
  return static_cast<bool>(in >> value);
}

bool at_end(std::istringstream &in) {
  in >> std::ws;
  return in.eof();
}

}  // namespace

EdgeListFile parse_edge_list(std::istream &in) {
  EdgeListFile file;
  int expected_edges = -1;
  int line_no = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (is_blank(line)) continue;

    if (const auto pos = line.find("path:"); pos != std::string::npos) {
      if (expected_edges < 0) throw ParseError(line_no, "path before header");
      if (file.path) throw ParseError(line_no, "duplicate path line");
      std::istringstream ss(line.substr(pos + 5));
      std::vector<Vertex> path;
      Vertex p = 0;
      while (ss >> p) path.push_back(p);
      if (!at_end(ss)) throw ParseError(line_no, "malformed path entry");
      file.path = std::move(path);
      continue;
    }

    std::istringstream ss(line);
    if (expected_edges < 0) {
      if (!read_exact(ss, file.num_vertices) || !read_exact(ss, expected_edges) ||
          !at_end(ss) || file.num_vertices < 0 || expected_edges < 0) {
        throw ParseError(line_no, "expected header 'n m'");
      }
      continue;
    }
    if (file.path) throw ParseError(line_no, "edge after path line");
    Vertex u = 0;
    Vertex v = 0;
    double w = 1.0;
    if (!read_exact(ss, u) || !read_exact(ss, v)) {
      throw ParseError(line_no, "malformed edge line '" + raw + "'");
    }
    if (!at_end(ss) && (!read_exact(ss, w) || !at_end(ss))) {
      throw ParseError(line_no, "malformed edge line '" + raw + "'");
    }
    if (u < 0 || v < 0 || u >= file.num_vertices || v >= file.num_vertices) {
      throw ParseError(line_no, "vertex out of range");
    }
    if (u == v) throw ParseError(line_no, "self-loop");
    file.edges.push_back(make_edge(u, v));
    file.weights.push_back(w);
  }
  if (expected_edges < 0) throw ParseError(0, "missing header 'n m'");
  if (static_cast<int>(file.edges.size()) != expected_edges) {
    throw ParseError(0, "header declares " + std::to_string(expected_edges) +
                            " edges, found " + std::to_string(file.edges.size()));
  }
  return file;
}

ProblemGraph to_problem_graph(const EdgeListFile &file) {
  ProblemGraph g(file.num_vertices);
  for (std::size_t i = 0; i < file.edges.size(); ++i) {
    g.add_edge(file.edges[i].u, file.edges[i].v, file.weights[i]);
  }
  return g;
}

HardwareGraph to_hardware_graph(const EdgeListFile &file) {
  HardwareGraph hw(file.num_vertices);
  for (const Edge &e : file.edges) hw.add_coupler(e.u, e.v);
  if (file.path) hw.set_hamiltonian_path(*file.path);
  return hw;
}

namespace {
EdgeListFile parse_file(const std::string &filename) {
  std::ifstream in(filename);
  if (!in) throw Error("cannot open '" + filename + "'");
  try {
    return parse_edge_list(in);
  } catch (const ParseError &e) {
    throw ParseError(e.line(), e.detail(), filename);
  }
}
}  // namespace

ProblemGraph read_problem_graph(const std::string &filename) {
  return to_problem_graph(parse_file(filename));
}

HardwareGraph read_hardware_graph(const std::string &filename) {
  return to_hardware_graph(parse_file(filename));
}

void write_edge_list(std::ostream &out, const ProblemGraph &g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    out << g.edge(id).u << ' ' << g.edge(id).v;
    if (g.weight(id) != 1.0) out << ' ' << g.weight(id);
    out << '\n';
  }
}

void write_edge_list(std::ostream &out, const HardwareGraph &g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge &e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (const auto &path = g.declared_path()) {
    out << "path:";
    for (Vertex p : *path) out << ' ' << p;
    out << '\n';
  }
}

}  // namespace qroute
