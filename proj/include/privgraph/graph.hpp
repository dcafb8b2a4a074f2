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


#ifndef PRIVGRAPH_GRAPH_HPP_
#define PRIVGRAPH_GRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "privgraph/errors.hpp"

namespace privgraph {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId tail;
  VertexId head;
  EdgeId id;
};

// One entry of an adjacency list: the edge and the vertex at its far end.
struct Incidence {
  EdgeId edge;
  VertexId neighbor;
};

// Public topology of a (multi)graph. Edge ids are assigned 0..E-1 in
// construction order and adjacency lists are kept in edge-id order, which is
// what makes every traversal in the library deterministic.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(int vertex_count,
                const std::vector<std::pair<VertexId, VertexId>>& endpoints,
                bool directed = false)
      : vertex_count_(vertex_count), directed_(directed) {
    if (vertex_count <= 0) {
      throw InvalidArgument("vertex count must be positive, got " +
                            std::to_string(vertex_count));
    }
    edges_.reserve(endpoints.size());
    for (const auto& [tail, head] : endpoints) {
      const auto id = static_cast<EdgeId>(edges_.size());
      if (!has_vertex(tail) || !has_vertex(head)) {
        throw InvalidArgument("edge " + std::to_string(id) +
                              " has an endpoint outside [0, " +
                              std::to_string(vertex_count) + ")");
      }
      edges_.push_back({tail, head, id});
    }
    out_ = BuildAdjacency(/*both_directions=*/!directed_);
    undirected_ = directed_ ? BuildAdjacency(/*both_directions=*/true) : out_;
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }

  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count_; }
  void CheckVertex(VertexId v) const {
    if (!has_vertex(v)) {
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " is outside [0, " +
                            std::to_string(vertex_count_) + ")");
    }
  }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }

  // Edges leaving v, honoring direction when the graph is directed.
  std::span<const Incidence> out_edges(VertexId v) const {
    return out_.Row(v);
  }
  // Edges touching v with direction ignored.
  std::span<const Incidence> incident(VertexId v) const {
    return undirected_.Row(v);
  }

  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    if (ed.tail != v && ed.head != v) {
      throw InvalidArgument("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                            std::to_string(e));
    }
    return ed.tail == v ? ed.head : ed.tail;
  }

 private:
  struct Adjacency {
    std::vector<std::size_t> offsets;
    std::vector<Incidence> entries;
    std::span<const Incidence> Row(VertexId v) const {
      const auto i = static_cast<std::size_t>(v);
      return std::span<const Incidence>(entries).subspan(
          offsets.at(i), offsets.at(i + 1) - offsets.at(i));
    }
  };

  Adjacency BuildAdjacency(bool both_directions) const {
    Adjacency adj;
    const auto n = static_cast<std::size_t>(vertex_count_);
    adj.offsets.assign(n + 1, 0);
    for (const Edge& e : edges_) {
      ++adj.offsets[static_cast<std::size_t>(e.tail) + 1];
      if (both_directions && e.head != e.tail) {
        ++adj.offsets[static_cast<std::size_t>(e.head) + 1];
      }
    }
    for (std::size_t i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
    adj.entries.resize(adj.offsets[n]);
    std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
    for (const Edge& e : edges_) {
      adj.entries[fill[static_cast<std::size_t>(e.tail)]++] = {e.id, e.head};
      if (both_directions && e.head != e.tail) {
        adj.entries[fill[static_cast<std::size_t>(e.head)]++] = {e.id, e.tail};
      }
    }
    return adj;
  }

  int vertex_count_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  Adjacency out_;
  Adjacency undirected_;
};

// The private database: one real weight per edge id.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::size_t size() const { return weights_.size(); }
  double operator[](EdgeId e) const {
    return weights_[static_cast<std::size_t>(e)];
  }
  double& operator[](EdgeId e) { return weights_[static_cast<std::size_t>(e)]; }
  std::span<const double> values() const { return weights_; }

  bool is_nonnegative() const {
    for (double x : weights_) {
      if (!(x >= 0.0)) return false;
    }
    return true;
  }

  double max_weight() const {
    double m = 0.0;
    for (double x : weights_) m = std::max(m, x);
    return m;
  }

  // Sum over the listed edges, accumulated left to right.
  double Total(std::span<const EdgeId> edge_ids) const {
    double sum = 0.0;
    for (EdgeId e : edge_ids) sum += (*this)[e];
    return sum;
  }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<double> weights_;
};

inline double L1Distance(const WeightFunction& a, const WeightFunction& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("weight functions have different lengths");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::abs(a[static_cast<EdgeId>(i)] - b[static_cast<EdgeId>(i)]);
  }
  return sum;
}

// Throws unless w has one entry per edge of g.
inline void CheckWeights(const WeightedGraph& g, const WeightFunction& w) {
  if (w.size() != static_cast<std::size_t>(g.edge_count())) {
    throw InvalidArgument("weight function has " + std::to_string(w.size()) +
                          " entries but the graph has " +
                          std::to_string(g.edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::isnan(w[static_cast<EdgeId>(i)])) {
      throw InvalidArgument("weight of edge " + std::to_string(i) + " is NaN");
    }
  }
}

inline void CheckNonnegative(const WeightedGraph& g, const WeightFunction& w) {
  CheckWeights(g, w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double x = w[static_cast<EdgeId>(i)];
    if (x < 0.0) throw NegativeWeightError(i, x);
  }
}

// A walk v0..vl together with the edge used for each step.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int hop_length() const { return static_cast<int>(edges.size()); }
  double Weight(const WeightFunction& w) const { return w.Total(edges); }

  // True when consecutive vertices are joined by the listed edge (respecting
  // direction for directed graphs).
  bool IsConsistentWith(const WeightedGraph& g) const {
    if (vertices.empty() || vertices.size() != edges.size() + 1) return false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] < 0 || edges[i] >= g.edge_count()) return false;
      const Edge& e = g.edge(edges[i]);
      const VertexId a = vertices[i];
      const VertexId b = vertices[i + 1];
      const bool forward = e.tail == a && e.head == b;
      const bool backward = e.tail == b && e.head == a;
      if (!(forward || (!g.directed() && backward))) return false;
    }
    return true;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

}  // namespace privgraph

#endif  // PRIVGRAPH_GRAPH_HPP_
