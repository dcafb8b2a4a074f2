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


#ifndef PRIVGRAPH_PRIVATE_STRUCTURES_HPP_
#define PRIVGRAPH_PRIVATE_STRUCTURES_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"
#include "privgraph/matching.hpp"
#include "privgraph/noise.hpp"
#include "privgraph/spanning_tree.hpp"

namespace privgraph {

// A spanning tree or perfect matching chosen on Laplace-perturbed weights,
// together with its cost under the true weights and the true optimum.
struct StructureRelease {
  std::vector<EdgeId> edges;
  WeightFunction perturbed;
  PrivacyParams params;
  double true_cost = 0.0;
  double opt_cost = 0.0;

  double excess() const { return true_cost - opt_cost; }
};

// Lap(1/eps) on every edge; negative results are kept.
inline WeightFunction PerturbEdges(const WeightedGraph& g,
                                   const WeightFunction& w,
                                   const PrivacyParams& params,
                                   NoiseSource& src) {
  params.Validate();
  CheckWeights(g, w);
  std::vector<double> noisy(w.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    noisy[static_cast<std::size_t>(e)] = w[e] + src.Laplace(1.0 / params.epsilon);
  }
  return WeightFunction(std::move(noisy));
}

inline StructureRelease PrivateMst(const WeightedGraph& g,
                                   const WeightFunction& w,
                                   const PrivacyParams& params,
                                   NoiseSource& src) {
  CheckConnected(g);
  StructureRelease out;
  out.params = params;
  out.perturbed = PerturbEdges(g, w, params, src);
  out.edges = MinimumSpanningTree(g, out.perturbed);
  if (!IsSpanningTree(g, out.edges)) {
    throw std::logic_error("released edge set is not a spanning tree");
  }
  out.true_cost = w.Total(out.edges);
  out.opt_cost = w.Total(MinimumSpanningTree(g, w));
  return out;
}

inline StructureRelease PrivateMatching(const WeightedGraph& g,
                                        const WeightFunction& w,
                                        const PrivacyParams& params,
                                        NoiseSource& src) {
  // Fails early, before any noise is drawn, when no perfect matching exists.
  const std::vector<EdgeId> optimum = MinWeightPerfectMatching(g, w);
  StructureRelease out;
  out.params = params;
  out.perturbed = PerturbEdges(g, w, params, src);
  out.edges = MinWeightPerfectMatching(g, out.perturbed);
  if (!IsPerfectMatching(g, out.edges)) {
    throw std::logic_error("released edge set is not a perfect matching");
  }
  out.true_cost = w.Total(out.edges);
  out.opt_cost = w.Total(optimum);
  return out;
}

// Excess cost guarantees that hold whenever every |noise| <= (1/eps) ln(E/gamma).
inline double MstExcessBound(const WeightedGraph& g, const PrivacyParams& params) {
  return 2.0 * (g.vertex_count() - 1) / params.epsilon *
         std::log(g.edge_count() / params.gamma);
}

inline double MatchingExcessBound(const WeightedGraph& g,
                                  const PrivacyParams& params) {
  return static_cast<double>(g.vertex_count()) / params.epsilon *
         std::log(g.edge_count() / params.gamma);
}

// Maximum-weight variants run the minimisers on negated weights.
inline WeightFunction Negated(const WeightFunction& w) {
  std::vector<double> neg(w.values().begin(), w.values().end());
  for (double& x : neg) x = -x;
  return WeightFunction(std::move(neg));
}

inline StructureRelease PrivateMaxSpanningTree(const WeightedGraph& g,
                                               const WeightFunction& w,
                                               const PrivacyParams& params,
                                               NoiseSource& src) {
  StructureRelease out = PrivateMst(g, Negated(w), params, src);
  out.true_cost = -out.true_cost;
  out.opt_cost = -out.opt_cost;
  out.perturbed = Negated(out.perturbed);
  return out;
}

inline StructureRelease PrivateMaxMatching(const WeightedGraph& g,
                                           const WeightFunction& w,
                                           const PrivacyParams& params,
                                           NoiseSource& src) {
  StructureRelease out = PrivateMatching(g, Negated(w), params, src);
  out.true_cost = -out.true_cost;
  out.opt_cost = -out.opt_cost;
  out.perturbed = Negated(out.perturbed);
  return out;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_PRIVATE_STRUCTURES_HPP_
