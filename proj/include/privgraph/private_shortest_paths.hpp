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


#ifndef PRIVGRAPH_PRIVATE_SHORTEST_PATHS_HPP_
#define PRIVGRAPH_PRIVATE_SHORTEST_PATHS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"
#include "privgraph/noise.hpp"
#include "privgraph/shortest_paths.hpp"

namespace privgraph {

// One-shot release of Laplace-perturbed edge weights. Every edge receives
// Lap(1/eps) noise plus a uniform upward shift (1/eps) ln(E/gamma) that biases
// searches toward few-hop paths. The released vector is the only object that
// touches private data; all queries are post-processing.
struct PerturbedWeights {
  WeightFunction released;
  double shift = 0.0;
  PrivacyParams params;
};

enum class ShiftMode { kApply, kZero };

inline double ShiftTerm(const PrivacyParams& params, int edge_count) {
  if (edge_count <= 0) return 0.0;
  return std::log(static_cast<double>(edge_count) / params.gamma) /
         params.epsilon;
}

inline PerturbedWeights ReleasePerturbedWeights(
    const WeightedGraph& g, const WeightFunction& w,
    const PrivacyParams& params, NoiseSource& src,
    ShiftMode shift_mode = ShiftMode::kApply) {
  params.Validate();
  CheckNonnegative(g, w);
  PerturbedWeights out;
  out.params = params;
  out.shift = shift_mode == ShiftMode::kApply ? ShiftTerm(params, g.edge_count())
                                              : 0.0;
  std::vector<double> noisy(w.size());
  const double scale = 1.0 / params.epsilon;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double x = src.Laplace(scale);
    // Clamping is post-processing; it never fires when |x| <= shift.
    noisy[static_cast<std::size_t>(e)] = std::max(0.0, w[e] + x + out.shift);
  }
  out.released = WeightFunction(std::move(noisy));
  return out;
}

struct ReleasedPath {
  Path path;
  // Length of `path` under the released weights.
  double released_length = 0.0;
};

// Exact shortest path under the released weights. Consumes no randomness.
inline ReleasedPath QueryPath(const PerturbedWeights& pw, const WeightedGraph& g,
                              VertexId s, VertexId t) {
  g.CheckVertex(t);
  const ShortestPathTree tree = ShortestPathsFrom(g, pw.released, s);
  ReleasedPath out;
  out.path = tree.PathTo(t);
  out.released_length = tree.distance[static_cast<std::size_t>(t)];
  return out;
}

// Additive error guarantee for a pair whose optimum has k_hops edges:
// (2 k / eps) ln(E / gamma). The all-pairs corollary uses k_hops = V.
inline double SpErrorBound(std::int64_t k_hops, const PrivacyParams& params,
                           std::int64_t edge_count) {
  params.Validate();
  if (k_hops < 0) throw InvalidArgument("hop count must be nonnegative");
  if (edge_count < 1) throw InvalidArgument("edge count must be positive");
  return 2.0 * static_cast<double>(k_hops) / params.epsilon *
         std::log(static_cast<double>(edge_count) / params.gamma);
}

}  // namespace privgraph

#endif  // PRIVGRAPH_PRIVATE_SHORTEST_PATHS_HPP_
