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


#ifndef PRIVGRAPH_PATH_HUB_HPP_
#define PRIVGRAPH_PATH_HUB_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"
#include "privgraph/noise.hpp"
#include "privgraph/numeric.hpp"

namespace privgraph {

// Nested hub levels on the path 1..V. Level i holds the multiples of
// stride(i) = r^i with r = round(V^(1/k)), so level i+1 is a subset of level
// i. Released values are the distances between consecutive hubs of each
// level, stored level by level.
class HubHierarchy {
 public:
  HubHierarchy(std::int64_t vertex_count, int levels)
      : vertex_count_(vertex_count), levels_(levels) {
    if (vertex_count < 2) throw InvalidArgument("path needs V >= 2");
    if (levels < 1 || levels > CeilLog2(vertex_count)) {
      throw InvalidArgument("level count must lie in [1, ceil(log2 V)] = [1, " +
                            std::to_string(CeilLog2(vertex_count)) + "]");
    }
    const double root = std::pow(static_cast<double>(vertex_count),
                                 1.0 / static_cast<double>(levels));
    ratio_ = std::max<std::int64_t>(2, std::llround(root));
    std::int64_t stride = 1;
    std::size_t offset = 0;
    for (int i = 0; i < levels; ++i) {
      strides_.push_back(stride);
      offsets_.push_back(offset);
      const std::int64_t hubs = vertex_count / stride;
      offset += static_cast<std::size_t>(std::max<std::int64_t>(0, hubs - 1));
      stride *= ratio_;
    }
    offsets_.push_back(offset);
  }

  std::int64_t vertex_count() const { return vertex_count_; }
  int levels() const { return levels_; }
  std::int64_t ratio() const { return ratio_; }
  std::int64_t stride(int level) const { return strides_.at(static_cast<std::size_t>(level)); }

  // S_i in increasing order.
  std::vector<std::int64_t> Level(int level) const {
    std::vector<std::int64_t> hubs;
    const std::int64_t s = stride(level);
    for (std::int64_t x = s; x <= vertex_count_; x += s) hubs.push_back(x);
    return hubs;
  }

  // Number of released gaps across all levels.
  std::size_t gap_count() const { return offsets_.back(); }

  // Index of the released gap [start, start + stride(level)].
  std::size_t GapIndex(int level, std::int64_t start) const {
    return offsets_.at(static_cast<std::size_t>(level)) +
           static_cast<std::size_t>(start / stride(level) - 1);
  }

 private:
  std::int64_t vertex_count_;
  int levels_;
  std::int64_t ratio_ = 2;
  std::vector<std::int64_t> strides_;
  std::vector<std::size_t> offsets_;
};

inline HubHierarchy BuildHierarchy(std::int64_t vertex_count, int levels) {
  return HubHierarchy(vertex_count, levels);
}

inline int DefaultHubLevels(std::int64_t vertex_count) {
  return CeilLog2(vertex_count);
}

namespace hub_internal {

// edge_at[p] is the id of the edge between path positions p+1 and p+2
// (graph vertices p and p+1).
inline std::vector<EdgeId> PathEdgeOrder(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() != n - 1) {
    throw InvalidArgument("not a path graph: expected " + std::to_string(n - 1) +
                          " edges, got " + std::to_string(g.edge_count()));
  }
  std::vector<EdgeId> edge_at(static_cast<std::size_t>(std::max(0, n - 1)), -1);
  for (const Edge& e : g.edges()) {
    const VertexId a = std::min(e.tail, e.head);
    const VertexId b = std::max(e.tail, e.head);
    if (b != a + 1 || edge_at[static_cast<std::size_t>(a)] != -1) {
      throw InvalidArgument("not a path graph: edge " + std::to_string(e.id) +
                            " does not join consecutive vertices exactly once");
    }
    edge_at[static_cast<std::size_t>(a)] = e.id;
  }
  return edge_at;
}

}  // namespace hub_internal

// Releases every consecutive-hub distance of every level with Lap(k/eps)
// noise. Within a level the hub segments are disjoint, so each edge feeds at
// most k released values.
inline NoisyRelease ReleaseHubDistances(const WeightedGraph& g,
                                        const HubHierarchy& h,
                                        const WeightFunction& w, double eps,
                                        NoiseSource& src) {
  if (!(eps > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (g.vertex_count() != h.vertex_count()) {
    throw InvalidArgument("hierarchy size does not match the path");
  }
  CheckNonnegative(g, w);
  const std::vector<EdgeId> edge_at = hub_internal::PathEdgeOrder(g);
  NoisyRelease rel;
  rel.noise_scale = static_cast<double>(h.levels()) / eps;
  rel.mechanism_tag = "path-hub k=" + std::to_string(h.levels());
  rel.values.reserve(h.gap_count());
  for (int level = 0; level < h.levels(); ++level) {
    const std::int64_t s = h.stride(level);
    for (std::int64_t a = s; a + s <= h.vertex_count(); a += s) {
      double exact = 0.0;
      for (std::int64_t p = a; p < a + s; ++p) {
        exact += w[edge_at[static_cast<std::size_t>(p - 1)]];
      }
      rel.values.push_back(exact + src.Laplace(rel.noise_scale));
      rel.query_labels.push_back(
          {static_cast<VertexId>(a), static_cast<VertexId>(a + s)});
    }
  }
  return rel;
}

struct HubEstimate {
  double distance = 0.0;
  int summand_count = 0;
};

// Distance between path positions x and y (1-indexed). Climbs from x through
// the levels to the highest level holding two hubs inside [x, y], walks that
// level, then descends to y. Levels where the climb does not move are
// skipped.
inline HubEstimate QueryHubDistance(const HubHierarchy& h,
                                    const NoisyRelease& rel, std::int64_t x,
                                    std::int64_t y) {
  if (x < 1 || y < 1 || x > h.vertex_count() || y > h.vertex_count()) {
    throw InvalidArgument("path position out of range");
  }
  if (rel.values.size() != h.gap_count()) {
    throw InvalidArgument("release does not match the hierarchy");
  }
  if (x > y) std::swap(x, y);
  HubEstimate out;
  if (x == y) return out;

  auto first_hub = [&](int level) {
    const std::int64_t s = h.stride(level);
    return (x + s - 1) / s * s;
  };
  auto last_hub = [&](int level) { return y / h.stride(level) * h.stride(level); };

  int top = 0;
  for (int level = 0; level < h.levels(); ++level) {
    if (last_hub(level) - first_hub(level) >= h.stride(level)) top = level;
  }
  auto walk = [&](int level, std::int64_t from, std::int64_t to) {
    const std::int64_t s = h.stride(level);
    for (std::int64_t a = from; a < to; a += s) {
      out.distance += rel.values[h.GapIndex(level, a)];
      ++out.summand_count;
    }
  };
  for (int level = 0; level < top; ++level) {
    walk(level, first_hub(level), first_hub(level + 1));
  }
  walk(top, first_hub(top), last_hub(top));
  for (int level = top - 1; level >= 0; --level) {
    walk(level, last_hub(level + 1), last_hub(level));
  }
  return out;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_PATH_HUB_HPP_
