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


#ifndef PRIVGRAPH_BOUNDED_WEIGHT_HPP_
#define PRIVGRAPH_BOUNDED_WEIGHT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/generators.hpp"
#include "privgraph/graph.hpp"
#include "privgraph/noise.hpp"
#include "privgraph/shortest_paths.hpp"
#include "privgraph/spanning_tree.hpp"

namespace privgraph {

struct BoundedWeightConfig {
  double lambda = 1.0;
  int k = 1;
  PrivacyParams params;
};

// A k-covering: every vertex is within k hops of its assigned center.
struct Covering {
  std::vector<VertexId> centers;      // ascending
  std::vector<VertexId> assignment;   // z(v) per vertex
  std::vector<int> hops_to_center;    // hd(v, z(v))
  int radius = 0;

  std::size_t size() const { return centers.size(); }

  std::size_t CenterIndex(VertexId z) const {
    const auto it = std::lower_bound(centers.begin(), centers.end(), z);
    if (it == centers.end() || *it != z) {
      throw InvalidArgument("vertex " + std::to_string(z) + " is not a center");
    }
    return static_cast<std::size_t>(it - centers.begin());
  }

  int max_hops() const {
    return hops_to_center.empty()
               ? 0
               : *std::max_element(hops_to_center.begin(), hops_to_center.end());
  }
};

// Multi-source BFS from `centers` (sorted). Each vertex is assigned its
// nearest center in hops, ties going to the smallest center id.
inline Covering AssignToCenters(const WeightedGraph& g,
                                std::vector<VertexId> centers, int radius) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Covering cov;
  cov.radius = radius;
  cov.assignment.assign(n, -1);
  cov.hops_to_center.assign(n, kUnreachableHops);
  std::vector<VertexId> frontier;
  for (VertexId z : centers) {
    g.CheckVertex(z);
    cov.assignment[static_cast<std::size_t>(z)] = z;
    cov.hops_to_center[static_cast<std::size_t>(z)] = 0;
    frontier.push_back(z);
  }
  for (int level = 0; !frontier.empty(); ++level) {
    std::vector<VertexId> next;
    for (VertexId u : frontier) {
      const VertexId zu = cov.assignment[static_cast<std::size_t>(u)];
      for (const Incidence& inc : g.incident(u)) {
        const auto vi = static_cast<std::size_t>(inc.neighbor);
        if (cov.hops_to_center[vi] == kUnreachableHops) {
          cov.hops_to_center[vi] = level + 1;
          cov.assignment[vi] = zu;
          next.push_back(inc.neighbor);
        } else if (cov.hops_to_center[vi] == level + 1 &&
                   zu < cov.assignment[vi]) {
          cov.assignment[vi] = zu;
        }
      }
    }
    frontier = std::move(next);
  }
  cov.centers = std::move(centers);
  return cov;
}

inline bool CoversWithin(const Covering& cov, int radius) {
  for (int h : cov.hops_to_center) {
    if (h == kUnreachableHops || h > radius) return false;
  }
  return true;
}

namespace covering_internal {

inline void RequireSound(const Covering& cov) {
  if (cov.centers.empty() || !CoversWithin(cov, cov.radius)) {
    throw std::logic_error("constructed covering fails its radius check");
  }
}

// Hop depths in the tree given by parent pointers, measured from `from`.
inline std::vector<int> TreeDepths(const ParentArray& tree, VertexId from) {
  const auto n = tree.parent.size();
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId p = tree.parent[v];
    if (p >= 0) {
      adj[v].push_back(p);
      adj[static_cast<std::size_t>(p)].push_back(static_cast<VertexId>(v));
    }
  }
  std::vector<int> depth(n, -1);
  std::queue<VertexId> q;
  depth[static_cast<std::size_t>(from)] = 0;
  q.push(from);
  while (!q.empty()) {
    const VertexId u = q.front();
    q.pop();
    for (VertexId v : adj[static_cast<std::size_t>(u)]) {
      if (depth[static_cast<std::size_t>(v)] < 0) {
        depth[static_cast<std::size_t>(v)] =
            depth[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
    }
  }
  return depth;
}

}  // namespace covering_internal

// k-covering of size at most floor(V / (k + 1)): take a BFS spanning tree,
// find an endpoint x of a longest tree path by double BFS, split vertices by
// (tree depth from x) mod (k + 1) and keep the smallest class that covers.
inline Covering CoverViaSpanningTree(const WeightedGraph& g, int k) {
  if (k < 1) throw InvalidArgument("covering radius must be >= 1");
  const ParentArray tree = SpanningTree(g);
  const int n = g.vertex_count();
  if (n < k + 1) {
    for (VertexId v = 0; v < n; ++v) {
      Covering single = AssignToCenters(g, {v}, k);
      if (CoversWithin(single, k)) return single;
    }
    throw InvalidArgument("no single vertex covers the graph within " +
                          std::to_string(k) + " hops");
  }
  const std::vector<int> from_root = covering_internal::TreeDepths(tree, 0);
  const auto far =
      std::max_element(from_root.begin(), from_root.end()) - from_root.begin();
  const std::vector<int> depth =
      covering_internal::TreeDepths(tree, static_cast<VertexId>(far));

  std::vector<std::vector<VertexId>> classes(static_cast<std::size_t>(k + 1));
  for (VertexId v = 0; v < n; ++v) {
    classes[static_cast<std::size_t>(depth[static_cast<std::size_t>(v)] % (k + 1))]
        .push_back(v);
  }
  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return classes[a].size() < classes[b].size();
  });
  for (std::size_t i : order) {
    if (classes[i].empty()) continue;
    Covering cov = AssignToCenters(g, classes[i], k);
    if (CoversWithin(cov, k)) return cov;
  }
  throw std::logic_error("no residue class formed a covering");
}

// Hubs of the side x side grid at (i, j) with i + 1 and j + 1 both multiples
// of s = round(V^(1/3)); every vertex is within 2 s hops of one.
inline Covering GridCovering(std::int64_t vertex_count) {
  const WeightedGraph g = MakeGridWithVertexCount(vertex_count);
  const int side = PerfectSquareRoot(vertex_count);
  const auto s = static_cast<int>(
      std::llround(std::cbrt(static_cast<double>(vertex_count))));
  std::vector<VertexId> centers;
  for (int i = s - 1; i < side; i += s) {
    for (int j = s - 1; j < side; j += s) centers.push_back(i * side + j);
  }
  Covering cov = AssignToCenters(g, centers, 2 * s);
  covering_internal::RequireSound(cov);
  return cov;
}

enum class CoveringMode { kApprox, kPure };

inline void CheckBoundedWeights(const WeightedGraph& g, const WeightFunction& w,
                                double lambda) {
  CheckNonnegative(g, w);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (w[e] > lambda) {
      throw InvalidArgument("weight of edge " + std::to_string(e) + " = " +
                            std::to_string(w[e]) + " exceeds lambda = " +
                            std::to_string(lambda));
    }
  }
}

// Noisy distances between every ordered pair of centers, row-major in center
// order. Pure mode: Lap(Z^2 / eps) per value, basic composition over Z^2
// values. Approx mode: each center's row (Z values, l1 sensitivity Z) gets
// Lap(Z / eps') and the Z rows compose under advanced composition into
// (eps, delta), eps' being the calibrated per-row budget.
inline NoisyRelease ReleaseCoveringDistances(const WeightedGraph& g,
                                             const WeightFunction& w,
                                             const Covering& cov,
                                             const BoundedWeightConfig& cfg,
                                             CoveringMode mode,
                                             NoiseSource& src) {
  cfg.params.Validate();
  if (!(cfg.lambda > 0.0)) throw InvalidArgument("lambda must be positive");
  CheckBoundedWeights(g, w, cfg.lambda);
  if (cov.assignment.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InvalidArgument("covering does not match the graph");
  }
  const auto z = static_cast<std::int64_t>(cov.size());
  const double zd = static_cast<double>(z);
  NoisyRelease rel;
  if (mode == CoveringMode::kPure) {
    rel.noise_scale = zd * zd / cfg.params.epsilon;
    rel.mechanism_tag = "covering-pure Z=" + std::to_string(z) +
                        " composition=basic values=" + std::to_string(z * z);
  } else {
    const double per_row = CalibratePerQuery(cfg.params, z, CompositionMode::kAdvanced);
    rel.noise_scale = zd / per_row;
    rel.mechanism_tag = "covering-approx Z=" + std::to_string(z) +
                        " composition=advanced blocks=" + std::to_string(z) +
                        " per_block_eps=" + std::to_string(per_row) +
                        " delta=" + std::to_string(cfg.params.delta);
  }
  rel.values.reserve(static_cast<std::size_t>(z * z));
  for (VertexId y : cov.centers) {
    const ShortestPathTree tree = ShortestPathsFrom(g, w, y);
    for (VertexId c : cov.centers) {
      rel.values.push_back(tree.distance[static_cast<std::size_t>(c)] +
                           src.Laplace(rel.noise_scale));
      rel.query_labels.push_back({y, c});
    }
  }
  return rel;
}

// a_{z(u), z(v)}; differs from d(u, v) by at most 2 k lambda plus noise.
inline double QueryCoveringDistance(const NoisyRelease& rel, const Covering& cov,
                                    VertexId u, VertexId v) {
  const std::size_t zu = cov.CenterIndex(cov.assignment.at(static_cast<std::size_t>(u)));
  const std::size_t zv = cov.CenterIndex(cov.assignment.at(static_cast<std::size_t>(v)));
  return rel.values.at(zu * cov.size() + zv);
}

// Covering radius balancing detour error against noise:
// approx k = floor(sqrt(V / (lambda eps))), 1/V < lambda eps < V;
// pure   k = floor(V^(2/3) / (lambda eps)^(1/3)), 1/V < lambda eps < V^2.
inline int ChooseK(std::int64_t vertex_count, double lambda, double eps,
                   CoveringMode mode) {
  if (vertex_count < 2) throw InvalidArgument("need V >= 2");
  if (!(lambda > 0.0 && eps > 0.0)) {
    throw InvalidArgument("lambda and epsilon must be positive");
  }
  const double v = static_cast<double>(vertex_count);
  const double le = lambda * eps;
  std::int64_t k = 0;
  if (mode == CoveringMode::kApprox) {
    if (!(le > 1.0 / v && le < v)) {
      throw InvalidArgument(
          "approx mode requires 1/V < lambda * epsilon < V");
    }
    // Largest k with k^2 * lambda * eps <= V.
    k = static_cast<std::int64_t>(std::floor(std::sqrt(v / le)));
    while (k > 0 && static_cast<double>(k * k) * le > v) --k;
    while (static_cast<double>((k + 1) * (k + 1)) * le <= v) ++k;
  } else {
    if (!(le > 1.0 / v && le < v * v)) {
      throw InvalidArgument(
          "pure mode requires 1/V < lambda * epsilon < V^2");
    }
    // Largest k with k^3 * lambda * eps <= V^2.
    k = static_cast<std::int64_t>(std::floor(std::cbrt(v * v / le)));
    while (k > 0 && static_cast<double>(k * k * k) * le > v * v) --k;
    while (static_cast<double>((k + 1) * (k + 1) * (k + 1)) * le <= v * v) ++k;
  }
  return static_cast<int>(std::clamp<std::int64_t>(k, 1, vertex_count - 1));
}

enum class NaiveMode { kPure, kApprox, kPerturb };

// Baselines over all V^2 ordered pairs, row-major.
//   pure:    Lap(V^2 / eps) per pair (basic composition).
//   approx:  Lap(1 / eps') per pair, eps' calibrated so the V^2-fold advanced
//            composition stays within (eps, delta).
//   perturb: Lap(1 / eps) per edge, clamped at 0, then exact distances on the
//            perturbed graph.
inline NoisyRelease NaiveAllPairs(const WeightedGraph& g, const WeightFunction& w,
                                  const PrivacyParams& params, NaiveMode mode,
                                  NoiseSource& src) {
  params.Validate();
  CheckNonnegative(g, w);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  NoisyRelease rel;
  rel.values.reserve(static_cast<std::size_t>(n * n));
  auto label_all = [&] {
    for (VertexId s = 0; s < n; ++s) {
      for (VertexId t = 0; t < n; ++t) rel.query_labels.push_back({s, t});
    }
  };
  if (mode == NaiveMode::kPerturb) {
    rel.noise_scale = 1.0 / params.epsilon;
    rel.mechanism_tag = "naive-perturb";
    std::vector<double> noisy(w.size());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      noisy[static_cast<std::size_t>(e)] =
          std::max(0.0, w[e] + src.Laplace(rel.noise_scale));
    }
    const WeightFunction released(std::move(noisy));
    for (const auto& row : AllPairsDistances(g, released)) {
      rel.values.insert(rel.values.end(), row.begin(), row.end());
    }
    label_all();
    return rel;
  }
  if (mode == NaiveMode::kPure) {
    rel.noise_scale = static_cast<double>(n * n) / params.epsilon;
    rel.mechanism_tag = "naive-pure";
  } else {
    const double per_pair =
        CalibratePerQuery(params, n * n, CompositionMode::kAdvanced);
    rel.noise_scale = 1.0 / per_pair;
    rel.mechanism_tag = "naive-approx per_pair_eps=" + std::to_string(per_pair);
  }
  for (const auto& row : AllPairsDistances(g, w)) {
    for (double d : row) rel.values.push_back(d + src.Laplace(rel.noise_scale));
  }
  label_all();
  return rel;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_BOUNDED_WEIGHT_HPP_
