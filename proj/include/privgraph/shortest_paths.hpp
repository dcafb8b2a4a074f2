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


#ifndef PRIVGRAPH_SHORTEST_PATHS_HPP_
#define PRIVGRAPH_SHORTEST_PATHS_HPP_

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"

namespace privgraph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr int kUnreachableHops = -1;
inline constexpr EdgeId kNoEdge = -1;

// Exact single-source result: distance and predecessor edge per vertex.
struct ShortestPathTree {
  VertexId source = 0;
  std::vector<double> distance;
  std::vector<EdgeId> predecessor_edge;
  std::vector<VertexId> predecessor;

  bool reachable(VertexId v) const {
    return distance.at(static_cast<std::size_t>(v)) != kInfinity;
  }

  Path PathTo(VertexId target) const {
    if (!reachable(target)) throw UnreachableError(source, target);
    Path p;
    for (VertexId v = target; v != source;
         v = predecessor[static_cast<std::size_t>(v)]) {
      p.vertices.push_back(v);
      p.edges.push_back(predecessor_edge[static_cast<std::size_t>(v)]);
    }
    p.vertices.push_back(source);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
  }
};

// Dijkstra over nonnegative weights. Among equal-distance predecessors the
// smallest edge id wins; only unsettled vertices are re-parented, so the
// predecessor relation stays acyclic even with zero-weight edges.
// Each distance is the left-to-right sum of its path's edge weights, so
// Path::Weight reproduces it bit for bit.
inline ShortestPathTree ShortestPathsFrom(const WeightedGraph& g,
                                         const WeightFunction& w,
                                         VertexId source) {
  CheckNonnegative(g, w);
  g.CheckVertex(source);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ShortestPathTree t;
  t.source = source;
  t.distance.assign(n, kInfinity);
  t.predecessor_edge.assign(n, kNoEdge);
  t.predecessor.assign(n, -1);
  std::vector<bool> settled(n, false);

  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  t.distance[static_cast<std::size_t>(source)] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    const auto ui = static_cast<std::size_t>(u);
    if (settled[ui] || d != t.distance[ui]) continue;
    settled[ui] = true;
    for (const Incidence& inc : g.out_edges(u)) {
      const VertexId v = inc.neighbor;
      const auto vi = static_cast<std::size_t>(v);
      if (v == u || settled[vi]) continue;
      const double nd = d + w[inc.edge];
      if (nd < t.distance[vi]) {
        t.distance[vi] = nd;
        t.predecessor_edge[vi] = inc.edge;
        t.predecessor[vi] = u;
        queue.emplace(nd, v);
      } else if (nd == t.distance[vi] && inc.edge < t.predecessor_edge[vi]) {
        t.predecessor_edge[vi] = inc.edge;
        t.predecessor[vi] = u;
      }
    }
  }
  return t;
}

// Exact all-pairs distances, one Dijkstra per source; row-major V x V.
inline std::vector<std::vector<double>> AllPairsDistances(
    const WeightedGraph& g, const WeightFunction& w) {
  std::vector<std::vector<double>> d;
  d.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    d.push_back(ShortestPathsFrom(g, w, s).distance);
  }
  return d;
}

// Breadth-first hop counts over the undirected view.
inline std::vector<int> HopDistance(const WeightedGraph& g, VertexId source) {
  g.CheckVertex(source);
  std::vector<int> hops(static_cast<std::size_t>(g.vertex_count()),
                        kUnreachableHops);
  std::queue<VertexId> frontier;
  hops[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (const Incidence& inc : g.incident(u)) {
      auto& h = hops[static_cast<std::size_t>(inc.neighbor)];
      if (h == kUnreachableHops) {
        h = hops[static_cast<std::size_t>(u)] + 1;
        frontier.push(inc.neighbor);
      }
    }
  }
  return hops;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_SHORTEST_PATHS_HPP_
