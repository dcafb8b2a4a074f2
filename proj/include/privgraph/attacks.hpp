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


#ifndef PRIVGRAPH_ATTACKS_HPP_
#define PRIVGRAPH_ATTACKS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"
#include "privgraph/matching.hpp"
#include "privgraph/noise.hpp"
#include "privgraph/private_shortest_paths.hpp"
#include "privgraph/private_structures.hpp"
#include "privgraph/shortest_paths.hpp"
#include "privgraph/spanning_tree.hpp"

namespace privgraph {

enum class GadgetKind { kSpPath, kMstStar, kMatchingHourglass };

inline std::string GadgetName(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kSpPath: return "sp";
    case GadgetKind::kMstStar: return "mst";
    case GadgetKind::kMatchingHourglass: return "matching";
  }
  return "?";
}

using Bits = std::vector<int>;

// A lower-bound gadget. Bit i is carried by the edge pair
// pair_edges[i] = {e_i^(0), e_i^(1)}: the bit-x weight function puts 0 on
// e_i^(x_i), 1 on e_i^(1 - x_i) and 0 on every other edge, and the adversary
// reads y_i = 0 exactly when e_i^(0) is in the released structure.
//
//   sp:       vertices 0..n, e_i^(0), e_i^(1) parallel between i and i+1.
//   mst:      center 0 and spokes 1..n, each joined to 0 by a parallel pair.
//   matching: n hourglasses on (b1, b2, c) -> 4c + 2 b1 + b2, with edges
//             (0, b, c)-(1, b', c) of id 4c + 2b + b'; e_c^(b') is the edge
//             (0, 1, c)-(1, b', c).
struct GadgetInstance {
  GadgetKind kind = GadgetKind::kSpPath;
  int n = 0;
  WeightedGraph graph;
  std::vector<std::array<EdgeId, 2>> pair_edges;

  // Path endpoints for the shortest-path gadget.
  VertexId source() const { return 0; }
  VertexId target() const { return graph.vertex_count() - 1 - extra_vertices; }
  int extra_vertices = 0;

  WeightFunction WeightsFor(const Bits& x) const {
    if (x.size() != static_cast<std::size_t>(n)) {
      throw InvalidArgument("bit vector has " + std::to_string(x.size()) +
                            " entries, gadget has " + std::to_string(n));
    }
    std::vector<double> w(static_cast<std::size_t>(graph.edge_count()), 0.0);
    for (int i = 0; i < n; ++i) {
      const int bit = x[static_cast<std::size_t>(i)];
      if (bit != 0 && bit != 1) throw InvalidArgument("bits must be 0 or 1");
      w[static_cast<std::size_t>(pair_edges[static_cast<std::size_t>(i)][1 - bit])] = 1.0;
    }
    return WeightFunction(std::move(w));
  }
};

inline GadgetInstance BuildGadget(GadgetKind kind, int n) {
  if (n < 1) throw InvalidArgument("gadget needs n >= 1");
  GadgetInstance g;
  g.kind = kind;
  g.n = n;
  std::vector<std::pair<VertexId, VertexId>> edges;
  switch (kind) {
    case GadgetKind::kSpPath:
    case GadgetKind::kMstStar:
      for (int i = 0; i < n; ++i) {
        const VertexId a = kind == GadgetKind::kSpPath ? i : 0;
        const VertexId b = i + 1;
        const auto id = static_cast<EdgeId>(edges.size());
        edges.emplace_back(a, b);
        edges.emplace_back(a, b);
        g.pair_edges.push_back({id, id + 1});
      }
      g.graph = WeightedGraph(n + 1, edges);
      break;
    case GadgetKind::kMatchingHourglass:
      for (int c = 0; c < n; ++c) {
        for (int b = 0; b < 2; ++b) {
          for (int bp = 0; bp < 2; ++bp) {
            edges.emplace_back(4 * c + b, 4 * c + 2 + bp);
          }
        }
        g.pair_edges.push_back({4 * c + 2, 4 * c + 3});
      }
      g.graph = WeightedGraph(4 * n, edges);
      break;
  }
  return g;
}

// Simple-graph variant of the sp and mst gadgets: each e_i^(1) is split
// through a new vertex. The first half carries the bit weight, the second is
// always 0; the reading rule is unchanged.
inline GadgetInstance SubdivideParallelPairs(const GadgetInstance& in) {
  if (in.kind == GadgetKind::kMatchingHourglass || in.extra_vertices != 0) {
    return in;
  }
  const int base = in.graph.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> edges;
  GadgetInstance out;
  out.kind = in.kind;
  out.n = in.n;
  for (int i = 0; i < in.n; ++i) {
    const Edge& e0 = in.graph.edge(in.pair_edges[static_cast<std::size_t>(i)][0]);
    const VertexId mid = base + i;
    const auto id = static_cast<EdgeId>(edges.size());
    edges.emplace_back(e0.tail, e0.head);
    edges.emplace_back(e0.tail, mid);
    edges.emplace_back(mid, e0.head);
    out.pair_edges.push_back({id, id + 1});
  }
  out.graph = WeightedGraph(base + in.n, edges);
  out.extra_vertices = in.n;
  return out;
}

namespace attack_internal {

inline void RequireWalk(const GadgetInstance& g, const std::vector<EdgeId>& ids) {
  VertexId at = g.source();
  for (EdgeId e : ids) {
    if (e < 0 || e >= g.graph.edge_count()) {
      throw InvalidArgument("released path uses an unknown edge");
    }
    const Edge& ed = g.graph.edge(e);
    if (ed.tail != at && ed.head != at) {
      throw InvalidArgument("released edges do not form a walk from the source");
    }
    at = g.graph.other_end(e, at);
  }
  if (at != g.target()) {
    throw InvalidArgument("released path does not end at the target");
  }
}

}  // namespace attack_internal

// Applies the gadget's bit-reading rule after checking that `released` is a
// path from source to target (sp, in walk order), a spanning tree (mst) or a
// perfect matching (matching).
inline Bits AdversaryReconstruct(const GadgetInstance& g,
                                 const std::vector<EdgeId>& released) {
  switch (g.kind) {
    case GadgetKind::kSpPath:
      attack_internal::RequireWalk(g, released);
      break;
    case GadgetKind::kMstStar:
      if (!IsSpanningTree(g.graph, released)) {
        throw InvalidArgument("released edges are not a spanning tree");
      }
      break;
    case GadgetKind::kMatchingHourglass:
      if (!IsPerfectMatching(g.graph, released)) {
        throw InvalidArgument("released edges are not a perfect matching");
      }
      break;
  }
  std::vector<bool> in_release(static_cast<std::size_t>(g.graph.edge_count()), false);
  for (EdgeId e : released) in_release[static_cast<std::size_t>(e)] = true;
  Bits y(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) {
    y[static_cast<std::size_t>(i)] =
        in_release[static_cast<std::size_t>(g.pair_edges[static_cast<std::size_t>(i)][0])] ? 0 : 1;
  }
  return y;
}

inline Bits AdversaryReconstruct(const GadgetInstance& g, const Path& path) {
  if (path.vertices.empty() || path.vertices.front() != g.source() ||
      path.vertices.back() != g.target() || !path.IsConsistentWith(g.graph)) {
    throw InvalidArgument("released path does not join source and target");
  }
  return AdversaryReconstruct(g, path.edges);
}

inline int HammingDistance(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) throw InvalidArgument("bit vectors differ in length");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

// (1 - (1 + e^eps) delta) / (1 + e^(2 eps)): the per-bit error floor that any
// (eps, delta)-DP mechanism on a gadget must pay.
inline double LowerBoundFactor(const PrivacyParams& params) {
  return (1.0 - (1.0 + std::exp(params.epsilon)) * params.delta) /
         (1.0 + std::exp(2.0 * params.epsilon));
}

// Lower bound alpha on expected excess cost (equivalently, expected Hamming
// error of the reconstruction) for a gadget with n bits. n plays V - 1 for the
// sp and mst gadgets and V / 4 for the matching gadget.
inline double TheoreticalFloor(int n, const PrivacyParams& params) {
  if (n < 0) throw InvalidArgument("bit count must be nonnegative");
  if (!(params.epsilon >= 0.0) || !(params.delta >= 0.0)) {
    throw InvalidArgument("epsilon and delta must be nonnegative");
  }
  return static_cast<double>(n) * LowerBoundFactor(params);
}

// Mechanism under attack: sees the gadget and the private weights, returns the
// released structure as edge ids (walk order for paths).
using GadgetMechanism = std::function<std::vector<EdgeId>(
    const GadgetInstance&, const WeightFunction&, NoiseSource&)>;

inline GadgetMechanism ExactMechanism() {
  return [](const GadgetInstance& g, const WeightFunction& w, NoiseSource&) {
    switch (g.kind) {
      case GadgetKind::kSpPath:
        return ShortestPathsFrom(g.graph, w, g.source()).PathTo(g.target()).edges;
      case GadgetKind::kMstStar:
        return MinimumSpanningTree(g.graph, w);
      case GadgetKind::kMatchingHourglass:
        return MinWeightPerfectMatching(g.graph, w);
    }
    return std::vector<EdgeId>{};
  };
}

// Perturbed-weight mechanisms: shifted Laplace weights + shortest path for
// sp, private MST for mst, private matching for matching.
inline GadgetMechanism LaplaceMechanism(const PrivacyParams& params) {
  return [params](const GadgetInstance& g, const WeightFunction& w,
                  NoiseSource& src) {
    switch (g.kind) {
      case GadgetKind::kSpPath: {
        const PerturbedWeights pw = ReleasePerturbedWeights(g.graph, w, params, src);
        return QueryPath(pw, g.graph, g.source(), g.target()).path.edges;
      }
      case GadgetKind::kMstStar:
        return PrivateMst(g.graph, w, params, src).edges;
      case GadgetKind::kMatchingHourglass:
        return PrivateMatching(g.graph, w, params, src).edges;
    }
    return std::vector<EdgeId>{};
  };
}

struct ReconstructionTrial {
  Bits input;
  std::vector<EdgeId> released;
  Bits reconstructed;
  int hamming = 0;
};

struct AttackResult {
  std::vector<ReconstructionTrial> trials;
  double mean_hamming = 0.0;
  // Standard error of mean_hamming.
  double standard_error = 0.0;
};

class AttackTrialError : public Error {
 public:
  AttackTrialError(std::int64_t trial, const std::string& what)
      : Error("attack trial " + std::to_string(trial) + ": " + what),
        trial_(trial) {}
  std::int64_t trial() const { return trial_; }

 private:
  std::int64_t trial_;
};

// Uniform random x per trial, w_x through the mechanism, bits read back.
// Trial t draws x from its own engine and noise from its own NoiseSource,
// both derived from (seed, t).
inline AttackResult RunAttack(const GadgetInstance& gadget,
                              const GadgetMechanism& mechanism,
                              std::int64_t trials, std::uint64_t seed,
                              bool null_noise = false) {
  if (trials < 1) throw InvalidArgument("need at least one trial");
  AttackResult result;
  result.trials.reserve(static_cast<std::size_t>(trials));
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::mt19937_64 bit_rng(
        NoiseSource::MixSeed(seed ^ 0x5DEECE66DULL, static_cast<std::uint64_t>(t)));
    NoiseSource src =
        NoiseSource::ForTrial(seed, static_cast<std::uint64_t>(t), null_noise);
    ReconstructionTrial trial;
    trial.input.resize(static_cast<std::size_t>(gadget.n));
    for (int& b : trial.input) b = static_cast<int>(bit_rng() >> 63);
    try {
      trial.released = mechanism(gadget, gadget.WeightsFor(trial.input), src);
      trial.reconstructed = AdversaryReconstruct(gadget, trial.released);
    } catch (const Error& e) {
      throw AttackTrialError(t, e.what());
    }
    trial.hamming = HammingDistance(trial.input, trial.reconstructed);
    sum += trial.hamming;
    sum_sq += static_cast<double>(trial.hamming) * trial.hamming;
    result.trials.push_back(std::move(trial));
  }
  const auto count = static_cast<double>(trials);
  result.mean_hamming = sum / count;
  if (trials > 1) {
    const double var =
        std::max(0.0, (sum_sq - count * result.mean_hamming * result.mean_hamming) /
                          (count - 1.0));
    result.standard_error = std::sqrt(var / count);
  }
  return result;
}

inline AttackResult RunAttack(GadgetKind kind, const GadgetMechanism& mechanism,
                              int n, std::int64_t trials, std::uint64_t seed) {
  return RunAttack(BuildGadget(kind, n), mechanism, trials, seed);
}

}  // namespace privgraph

#endif  // PRIVGRAPH_ATTACKS_HPP_
