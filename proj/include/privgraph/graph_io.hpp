// Copyright 2026 The privgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PRIVGRAPH_GRAPH_IO_HPP_
#define PRIVGRAPH_GRAPH_IO_HPP_

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"

namespace privgraph {

// Edge-list format:
//
//   # privgraph v1 directed=0 V=3
//   0 1 1.5
//   1 2 0.25
//
// One `tail head weight` line per edge, edge ids in file order. Blank lines
// and other `#` lines are ignored.
struct GraphFile {
  WeightedGraph graph;
  WeightFunction weights;
};

// Shortest decimal that parses back to the same double.
inline std::string FormatDouble(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace io_internal {

inline std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline long long ParseInt(std::string_view tok, std::size_t line, const char* what) {
  long long v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

inline double ParseReal(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError(line, "bad weight '" + std::string(tok) + "'");
  }
  if (!std::isfinite(v)) {
    throw ParseError(line, "weight must be finite, got '" + std::string(tok) + "'");
  }
  return v;
}

inline bool IsHeader(const std::vector<std::string_view>& t) {
  return t.size() >= 2 && t[0] == "#" && t[1] == "privgraph";
}

}  // namespace io_internal

inline GraphFile ParseGraph(std::istream& in) {
  using namespace io_internal;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  bool directed = false;
  long long vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<double> weights;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = Tokens(line);
    if (t.empty()) continue;
    if (IsHeader(t)) {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (t.size() != 5 || t[2] != "v1" || t[3].substr(0, 9) != "directed=" ||
          t[4].substr(0, 2) != "V=") {
        throw ParseError(line_no,
                         "header must read '# privgraph v1 directed={0|1} V=<int>'");
      }
      const auto flag = t[3].substr(9);
      if (flag != "0" && flag != "1") {
        throw ParseError(line_no, "directed flag must be 0 or 1");
      }
      directed = flag == "1";
      vertex_count = ParseInt(t[4].substr(2), line_no, "vertex count");
      if (vertex_count <= 0 || vertex_count > 100000000) {
        throw ParseError(line_no, "vertex count must lie in [1, 1e8]");
      }
      have_header = true;
      continue;
    }
    if (t[0].front() == '#') continue;
    if (!have_header) throw ParseError(line_no, "missing '# privgraph v1' header");
    if (t.size() != 3) {
      throw ParseError(line_no, "expected 'tail head weight'");
    }
    const long long tail = ParseInt(t[0], line_no, "tail");
    const long long head = ParseInt(t[1], line_no, "head");
    for (long long v : {tail, head}) {
      if (v < 0 || v >= vertex_count) {
        throw ParseError(line_no, "vertex " + std::to_string(v) +
                                      " outside [0, " +
                                      std::to_string(vertex_count) + ")");
      }
    }
    edges.emplace_back(static_cast<VertexId>(tail), static_cast<VertexId>(head));
    weights.push_back(ParseReal(t[2], line_no));
  }
  if (!have_header) throw ParseError(line_no, "missing '# privgraph v1' header");
  return {WeightedGraph(static_cast<int>(vertex_count), edges, directed),
          WeightFunction(std::move(weights))};
}

inline GraphFile ParseGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  return ParseGraph(in);
}

inline GraphFile ParseGraphString(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in);
}

inline void WriteGraph(std::ostream& out, const WeightedGraph& g,
                       const WeightFunction& w) {
  CheckWeights(g, w);
  out << "# privgraph v1 directed=" << (g.directed() ? 1 : 0)
      << " V=" << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.tail << ' ' << e.head << ' ' << FormatDouble(w[e.id]) << '\n';
  }
}

inline std::string WriteGraphString(const WeightedGraph& g,
                                    const WeightFunction& w) {
  std::ostringstream out;
  WriteGraph(out, g, w);
  return out.str();
}

// Whitespace-separated reals; `#` starts a comment line.
inline std::vector<double> ParseWeightList(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = io_internal::Tokens(line);
    if (t.empty() || t[0].front() == '#') continue;
    for (auto tok : t) out.push_back(io_internal::ParseReal(tok, line_no));
  }
  return out;
}

inline std::vector<double> ParseWeightListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open weight file '" + path + "'");
  return ParseWeightList(in);
}

// Vertex pairs, one `s t` per line.
inline std::vector<std::pair<VertexId, VertexId>> ParsePairList(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = io_internal::Tokens(line);
    if (t.empty() || t[0].front() == '#') continue;
    if (t.size() != 2) throw ParseError(line_no, "expected 's t'");
    out.emplace_back(
        static_cast<VertexId>(io_internal::ParseInt(t[0], line_no, "vertex")),
        static_cast<VertexId>(io_internal::ParseInt(t[1], line_no, "vertex")));
  }
  return out;
}

inline std::vector<std::pair<VertexId, VertexId>> ParsePairListFile(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open pair file '" + path + "'");
  return ParsePairList(in);
}

}  // namespace privgraph

#endif  // PRIVGRAPH_GRAPH_IO_HPP_
