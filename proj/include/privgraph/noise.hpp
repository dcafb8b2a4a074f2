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


#ifndef PRIVGRAPH_NOISE_HPP_
#define PRIVGRAPH_NOISE_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"

namespace privgraph {

// Privacy budget (epsilon, delta) plus the failure probability gamma used by
// the accuracy statements.
struct PrivacyParams {
  double epsilon = 1.0;
  double delta = 0.0;
  double gamma = 0.05;

  void Validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
      throw InvalidArgument("epsilon must be positive and finite");
    }
    if (!(delta >= 0.0 && delta < 1.0)) {
      throw InvalidArgument("delta must lie in [0, 1)");
    }
    if (!(gamma > 0.0 && gamma < 1.0)) {
      throw InvalidArgument("gamma must lie in (0, 1)");
    }
  }

  static PrivacyParams Create(double epsilon, double delta, double gamma) {
    PrivacyParams p{epsilon, delta, gamma};
    p.Validate();
    return p;
  }
};

// Seeded stream of Laplace draws. Every draw consumes exactly one 64-bit word
// of a mt19937_64 engine and is produced by inverting the Laplace CDF, so the
// stream depends only on the seed. The null source returns 0 for every draw
// but still counts draws, which lets tests audit how much noise a mechanism
// asked for.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static NoiseSource Null() {
    NoiseSource s(0);
    s.null_ = true;
    return s;
  }

  // Independent stream for one trial of an experiment.
  static NoiseSource ForTrial(std::uint64_t master_seed, std::uint64_t trial,
                              bool null_noise = false) {
    if (null_noise) return Null();
    return NoiseSource(MixSeed(master_seed, trial));
  }

  // splitmix64 finaliser over (seed, index).
  static std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  bool is_null() const { return null_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t laplace_draws() const { return laplace_draws_; }

  // Uniform on the open interval (0, 1).
  double Uniform() {
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double Laplace(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
      throw InvalidArgument("Laplace scale must be positive and finite");
    }
    ++laplace_draws_;
    if (null_) return 0.0;
    const double u = Uniform();
    return u < 0.5 ? scale * std::log(2.0 * u)
                   : -scale * std::log(2.0 * (1.0 - u));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool null_ = false;
  std::uint64_t laplace_draws_ = 0;
};

inline double SampleLaplace(NoiseSource& src, double scale) {
  return src.Laplace(scale);
}

// A queried pair of vertices. Meaning of the pair is mechanism-specific.
struct QueryLabel {
  VertexId a;
  VertexId b;
  friend bool operator==(const QueryLabel&, const QueryLabel&) = default;
};

// Output of a Laplace mechanism: noisy answers, what was asked, and the noise
// scale used for every answer.
struct NoisyRelease {
  std::vector<double> values;
  std::vector<QueryLabel> query_labels;
  double noise_scale = 0.0;
  std::string mechanism_tag;

  std::size_t size() const { return values.size(); }
};

// With probability >= 1 - gamma, |sum of t iid Lap(b)| < 4 b sqrt(t) ln(2/gamma).
inline double ConcentrationBound(double scale, std::int64_t summands,
                                 double gamma) {
  if (!(scale > 0.0)) throw InvalidArgument("scale must be positive");
  if (summands < 1) throw InvalidArgument("summand count must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("gamma must lie in (0, 1)");
  }
  return 4.0 * scale * std::sqrt(static_cast<double>(summands)) *
         std::log(2.0 / gamma);
}

inline PrivacyParams BasicComposition(std::int64_t k,
                                      const PrivacyParams& per_query) {
  if (k < 1) throw InvalidArgument("composition count must be >= 1");
  const auto kd = static_cast<double>(k);
  return {kd * per_query.epsilon, kd * per_query.delta, per_query.gamma};
}

// k-fold adaptive composition of (eps, delta) mechanisms:
//   eps' = sqrt(2 k ln(1/delta_slack)) eps + k eps (e^eps - 1),
//   delta' = k delta + delta_slack.
inline PrivacyParams AdvancedComposition(std::int64_t k, double eps,
                                         double delta, double delta_slack) {
  if (k < 1) throw InvalidArgument("composition count must be >= 1");
  if (!(eps >= 0.0)) throw InvalidArgument("epsilon must be nonnegative");
  if (!(delta >= 0.0)) throw InvalidArgument("delta must be nonnegative");
  if (!(delta_slack > 0.0 && delta_slack < 1.0)) {
    throw InvalidArgument("delta slack must lie in (0, 1)");
  }
  const auto kd = static_cast<double>(k);
  PrivacyParams out;
  out.epsilon = std::sqrt(2.0 * kd * std::log(1.0 / delta_slack)) * eps +
                kd * eps * std::expm1(eps);
  out.delta = kd * delta + delta_slack;
  return out;
}

enum class CompositionMode { kBasic, kAdvanced };

// Largest per-query epsilon whose k-fold composition stays within `total`.
// Basic mode is exact division. Advanced mode spends all of total.delta as the
// slack term (per-query delta 0) and bisects the monotone forward formula.
inline double CalibratePerQuery(const PrivacyParams& total, std::int64_t k,
                                CompositionMode mode) {
  if (k < 1) throw InvalidArgument("composition count must be >= 1");
  if (!(total.epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (mode == CompositionMode::kBasic) {
    return total.epsilon / static_cast<double>(k);
  }
  if (!(total.epsilon < 1.0)) {
    throw InvalidArgument("advanced composition needs total epsilon in (0, 1)");
  }
  if (!(total.delta > 0.0 && total.delta < 1.0)) {
    throw InvalidArgument(
        "advanced composition needs a positive delta budget, got delta = " +
        std::to_string(total.delta));
  }
  auto composed = [&](double eps) {
    return AdvancedComposition(k, eps, 0.0, total.delta).epsilon;
  };
  double lo = 0.0;
  double hi = total.epsilon;
  while (composed(hi) <= total.epsilon) {
    lo = hi;
    hi *= 2.0;
  }
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid == lo || mid == hi) break;
    if (composed(mid) <= total.epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_NOISE_HPP_
