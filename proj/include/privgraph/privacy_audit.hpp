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


#ifndef PRIVGRAPH_PRIVACY_AUDIT_HPP_
#define PRIVGRAPH_PRIVACY_AUDIT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"
#include "privgraph/noise.hpp"
#include "privgraph/private_shortest_paths.hpp"

namespace privgraph {

struct RatioCheckResult {
  double epsilon = 0.0;
  double limit = 0.0;       // e^eps * (1 + slack)
  double worst_ratio = 0.0; // over bins populated in both histograms
  int bins_compared = 0;
  std::vector<std::int64_t> counts_a;
  std::vector<std::int64_t> counts_b;

  bool passed() const { return bins_compared > 0 && worst_ratio <= limit; }
};

// Empirical check of the privacy plumbing: on the path 0 - 1 - 2, releases
// the perturbed length of the 0 -> 2 path under two neighboring weight
// functions, (1, 1) and (1, 2), and compares histograms bin by bin. Bins with
// fewer than `min_count` samples on either side are skipped.
inline RatioCheckResult RatioSmokeTest(double epsilon, std::uint64_t seed,
                                       std::int64_t runs = 100000, int bins = 40,
                                       std::int64_t min_count = 500,
                                       double slack = 0.15) {
  if (runs < 1 || bins < 1) throw InvalidArgument("runs and bins must be positive");
  const PrivacyParams params = PrivacyParams::Create(epsilon, 0.0, 0.05);
  const WeightedGraph g(3, {{0, 1}, {1, 2}});
  const WeightFunction wa({1.0, 1.0});
  const WeightFunction wb({1.0, 2.0});
  const double shift = ShiftTerm(params, g.edge_count());
  const double spread = 8.0 / epsilon;
  const double lo = 2.0 + 2.0 * shift - spread;
  const double hi = 3.0 + 2.0 * shift + spread;
  const double width = (hi - lo) / bins;

  RatioCheckResult out;
  out.epsilon = epsilon;
  out.limit = std::exp(epsilon) * (1.0 + slack);
  out.counts_a.assign(static_cast<std::size_t>(bins), 0);
  out.counts_b.assign(static_cast<std::size_t>(bins), 0);
  auto fill = [&](const WeightFunction& w, std::uint64_t stream,
                  std::vector<std::int64_t>& counts) {
    NoiseSource src(NoiseSource::MixSeed(seed, stream));
    for (std::int64_t r = 0; r < runs; ++r) {
      const PerturbedWeights pw = ReleasePerturbedWeights(g, w, params, src);
      const double len = pw.released[0] + pw.released[1];
      const auto b = static_cast<long long>(std::floor((len - lo) / width));
      counts[static_cast<std::size_t>(std::clamp<long long>(b, 0, bins - 1))]++;
    }
  };
  fill(wa, 0, out.counts_a);
  fill(wb, 1, out.counts_b);
  for (std::size_t i = 0; i < out.counts_a.size(); ++i) {
    const auto a = out.counts_a[i];
    const auto b = out.counts_b[i];
    if (a < min_count || b < min_count) continue;
    ++out.bins_compared;
    const double r = static_cast<double>(std::max(a, b)) /
                     static_cast<double>(std::min(a, b));
    out.worst_ratio = std::max(out.worst_ratio, r);
  }
  return out;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_PRIVACY_AUDIT_HPP_
