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


#ifndef PRIVGRAPH_MATCHING_HPP_
#define PRIVGRAPH_MATCHING_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"

namespace privgraph {

// Largest non-bipartite instance solved by exhaustive search.
inline constexpr int kMaxBruteForceMatchingVertices = 12;

namespace matching_internal {

// Two-colouring of the undirected view, or nullopt if an odd cycle (or a
// self-loop) exists. Also reports whether some component is unbalanced.
struct Bipartition {
  std::vector<int> side;
  bool balanced = true;
};

inline std::optional<Bipartition> TwoColour(const WeightedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Bipartition b;
  b.side.assign(n, -1);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (b.side[static_cast<std::size_t>(start)] != -1) continue;
    int count[2] = {0, 0};
    std::queue<VertexId> frontier;
    b.side[static_cast<std::size_t>(start)] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      const VertexId u = frontier.front();
      frontier.pop();
      const int su = b.side[static_cast<std::size_t>(u)];
      ++count[su];
      for (const Incidence& inc : g.incident(u)) {
        if (inc.neighbor == u) return std::nullopt;
        int& sv = b.side[static_cast<std::size_t>(inc.neighbor)];
        if (sv == -1) {
          sv = 1 - su;
          frontier.push(inc.neighbor);
        } else if (sv == su) {
          return std::nullopt;
        }
      }
    }
    if (count[0] != count[1]) b.balanced = false;
  }
  return b;
}

// Minimum-cost assignment on a square matrix (Hungarian method with
// potentials). Returns assignment[row] = column.
inline std::vector<std::size_t> SolveAssignment(
    const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
  return assignment;
}

inline std::vector<EdgeId> BipartiteMatching(const WeightedGraph& g,
                                             const WeightFunction& w,
                                             const std::vector<int>& side) {
  std::vector<VertexId> left, right;
  std::vector<std::size_t> index(side.size());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& bucket = side[static_cast<std::size_t>(v)] == 0 ? left : right;
    index[static_cast<std::size_t>(v)] = bucket.size();
    bucket.push_back(v);
  }
  const std::size_t n = left.size();
  // Cheapest (then lowest-id) edge per left/right pair.
  std::vector<std::vector<EdgeId>> best(n, std::vector<EdgeId>(n, -1));
  double magnitude = 1.0;
  for (const Edge& e : g.edges()) {
    magnitude += std::abs(w[e.id]);
    const bool tail_left = side[static_cast<std::size_t>(e.tail)] == 0;
    const VertexId l = tail_left ? e.tail : e.head;
    const VertexId r = tail_left ? e.head : e.tail;
    EdgeId& slot = best[index[static_cast<std::size_t>(l)]]
                       [index[static_cast<std::size_t>(r)]];
    if (slot == -1 || w[e.id] < w[slot]) slot = e.id;
  }
  const double forbidden = magnitude * static_cast<double>(n + 1);
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, forbidden));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (best[i][j] != -1) cost[i][j] = w[best[i][j]];
    }
  }
  const auto assignment = SolveAssignment(cost);
  std::vector<EdgeId> matching;
  matching.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const EdgeId e = best[i][assignment[i]];
    if (e == -1) throw NoPerfectMatchingError("graph has no perfect matching");
    matching.push_back(e);
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

class ExhaustiveMatcher {
 public:
  ExhaustiveMatcher(const WeightedGraph& g, const WeightFunction& w)
      : g_(g), w_(w), matched_(static_cast<std::size_t>(g.vertex_count()), false) {}

  std::optional<std::vector<EdgeId>> Solve() {
    Recurse();
    return best_;
  }

 private:
  void Recurse() {
    const auto it = std::find(matched_.begin(), matched_.end(), false);
    if (it == matched_.end()) {
      Consider();
      return;
    }
    const auto u = static_cast<VertexId>(it - matched_.begin());
    matched_[static_cast<std::size_t>(u)] = true;
    for (const Incidence& inc : g_.incident(u)) {
      const auto vi = static_cast<std::size_t>(inc.neighbor);
      if (inc.neighbor == u || matched_[vi]) continue;
      matched_[vi] = true;
      current_.push_back(inc.edge);
      Recurse();
      current_.pop_back();
      matched_[vi] = false;
    }
    matched_[static_cast<std::size_t>(u)] = false;
  }

  void Consider() {
    std::vector<EdgeId> ids = current_;
    std::sort(ids.begin(), ids.end());
    const double cost = w_.Total(ids);
    if (!best_ || cost < best_cost_ || (cost == best_cost_ && ids < *best_)) {
      best_ = std::move(ids);
      best_cost_ = cost;
    }
  }

  const WeightedGraph& g_;
  const WeightFunction& w_;
  std::vector<bool> matched_;
  std::vector<EdgeId> current_;
  std::optional<std::vector<EdgeId>> best_;
  double best_cost_ = 0.0;
};

}  // namespace matching_internal

// Minimum-weight perfect matching over the undirected view; negative weights
// allowed. Bipartite graphs use the assignment algorithm, anything else is
// searched exhaustively (V <= 12). Returns edge ids in ascending order.
inline std::vector<EdgeId> MinWeightPerfectMatching(const WeightedGraph& g,
                                                    const WeightFunction& w) {
  CheckWeights(g, w);
  if (g.vertex_count() % 2 != 0) {
    throw NoPerfectMatchingError("graph has an odd number of vertices");
  }
  if (auto parts = matching_internal::TwoColour(g)) {
    if (!parts->balanced) {
      throw NoPerfectMatchingError(
          "a connected component has unequal bipartition sides");
    }
    return matching_internal::BipartiteMatching(g, w, parts->side);
  }
  if (g.vertex_count() > kMaxBruteForceMatchingVertices) {
    throw InstanceTooLargeError(
        "non-bipartite matching is limited to " +
        std::to_string(kMaxBruteForceMatchingVertices) + " vertices, got " +
        std::to_string(g.vertex_count()));
  }
  auto best = matching_internal::ExhaustiveMatcher(g, w).Solve();
  if (!best) throw NoPerfectMatchingError("graph has no perfect matching");
  return *best;
}

inline bool IsPerfectMatching(const WeightedGraph& g,
                              const std::vector<EdgeId>& edge_ids) {
  if (edge_ids.size() * 2 != static_cast<std::size_t>(g.vertex_count())) {
    return false;
  }
  std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
  for (EdgeId e : edge_ids) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (ed.tail == ed.head) return false;
    for (VertexId v : {ed.tail, ed.head}) {
      if (covered[static_cast<std::size_t>(v)]) return false;
      covered[static_cast<std::size_t>(v)] = true;
    }
  }
  return true;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_MATCHING_HPP_
