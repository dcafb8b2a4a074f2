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


#include "privgraph/bounded_weight.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "privgraph/errors.hpp"
#include "privgraph/generators.hpp"
#include "privgraph/shortest_paths.hpp"

namespace privgraph {
namespace {

// Independent coverage check: BFS hop distance from every vertex to its
// assigned center.
void ExpectCovers(const WeightedGraph& g, const Covering& cov, int k) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexId z = cov.assignment[static_cast<std::size_t>(v)];
    ASSERT_TRUE(std::binary_search(cov.centers.begin(), cov.centers.end(), z));
    const int h = HopDistance(g, z)[static_cast<std::size_t>(v)];
    ASSERT_GE(h, 0);
    ASSERT_LE(h, k);
    ASSERT_EQ(h, cov.hops_to_center[static_cast<std::size_t>(v)]);
  }
}

TEST(CoveringTest, PathOfFive) {
  const WeightedGraph g = MakePath(5);
  const Covering cov = CoverViaSpanningTree(g, 1);
  EXPECT_LE(cov.size(), 2u);
  ExpectCovers(g, cov, 1);
}

TEST(CoveringTest, LargeRadiusGivesSingleCenter) {
  const WeightedGraph g = MakePath(4);
  const Covering cov = CoverViaSpanningTree(g, 5);
  EXPECT_EQ(cov.size(), 1u);
  ExpectCovers(g, cov, 5);
}

TEST(CoveringTest, GridRadiusThree) {
  const WeightedGraph g = MakeGridWithVertexCount(64);
  const Covering cov = CoverViaSpanningTree(g, 3);
  EXPECT_LE(cov.size(), 16u);
  ExpectCovers(g, cov, 3);
}

TEST(CoveringTest, RejectsBadInput) {
  EXPECT_THROW(CoverViaSpanningTree(MakePath(4), 0), InvalidArgument);
  EXPECT_THROW(CoverViaSpanningTree(WeightedGraph(3, {{0, 1}}), 1),
               DisconnectedGraphError);
}

TEST(CoveringTest, AssignmentTiesGoToSmallestCenter) {
  // Vertex 1 sits between centers 0 and 2.
  const Covering cov = AssignToCenters(MakePath(3), {2, 0}, 1);
  EXPECT_EQ(cov.centers, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(cov.assignment, (std::vector<VertexId>{0, 0, 2}));
}

TEST(CoveringProperty, SizeAndRadiusOnRandomGraphs) {
  std::mt19937_64 rng(44);
  for (int iter = 0; iter < 120; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 127);
    const WeightedGraph g = iter % 2 ? MakeRandomTree(n, rng)
                                     : MakeRandomConnected(n, 0.05, rng);
    for (int k = 1; k <= 5; ++k) {
      if (n < k + 1) continue;
      const Covering cov = CoverViaSpanningTree(g, k);
      ASSERT_LE(cov.size(), static_cast<std::size_t>(n / (k + 1)));
      ExpectCovers(g, cov, k);
    }
  }
}

TEST(GridCoveringTest, SixtyFour) {
  const Covering cov = GridCovering(64);
  EXPECT_EQ(cov.centers, (std::vector<VertexId>{3 * 8 + 3, 3 * 8 + 7, 7 * 8 + 3, 7 * 8 + 7}));
  EXPECT_EQ(cov.radius, 8);
  EXPECT_LE(cov.max_hops(), 8);
  ExpectCovers(MakeGridWithVertexCount(64), cov, 8);
}

TEST(GridCoveringTest, Four) {
  const Covering cov = GridCovering(4);
  EXPECT_EQ(cov.centers, (std::vector<VertexId>{3}));
  ExpectCovers(MakeGridWithVertexCount(4), cov, 2);
}

TEST(GridCoveringTest, RejectsNonSquare) {
  EXPECT_THROW(GridCovering(50), InvalidArgument);
}

TEST(GridCoveringProperty, AllSquares) {
  for (int side = 1; side <= 16; ++side) {
    const std::int64_t v = side * side;
    const Covering cov = GridCovering(v);
    ExpectCovers(MakeGridWithVertexCount(v), cov, cov.radius);
  }
}

TEST(ChooseKTest, Examples) {
  EXPECT_EQ(ChooseK(100, 1.0, 1.0, CoveringMode::kApprox), 10);
  EXPECT_EQ(ChooseK(64, 1.0, 1.0, CoveringMode::kPure), 16);
  EXPECT_THROW(ChooseK(100, 1.0, 100.0, CoveringMode::kApprox), InvalidArgument);
  EXPECT_THROW(ChooseK(100, 0.01, 1.0, CoveringMode::kApprox), InvalidArgument);
  EXPECT_NO_THROW(ChooseK(100, 1.0, 100.0, CoveringMode::kPure));
  EXPECT_THROW(ChooseK(10, 1.0, 100.0, CoveringMode::kPure), InvalidArgument);
  EXPECT_EQ(ChooseK(4, 1.0, 0.3, CoveringMode::kApprox), 3);
}

TEST(CoveringReleaseTest, NullNoiseCentersExact) {
  std::mt19937_64 rng(3);
  const WeightedGraph g = MakeRandomConnected(40, 0.1, rng);
  const WeightFunction w = DyadicWeights(g, 1.0, rng);
  const Covering cov = CoverViaSpanningTree(g, 2);
  const auto exact = AllPairsDistances(g, w);
  for (CoveringMode mode : {CoveringMode::kPure, CoveringMode::kApprox}) {
    NoiseSource src = NoiseSource::Null();
    const NoisyRelease rel = ReleaseCoveringDistances(
        g, w, cov, {1.0, 2, PrivacyParams::Create(0.5, 1e-6, 0.05)}, mode, src);
    EXPECT_EQ(rel.values.size(), cov.size() * cov.size());
    EXPECT_EQ(src.laplace_draws(), cov.size() * cov.size());
    for (VertexId a : cov.centers) {
      for (VertexId b : cov.centers) {
        EXPECT_EQ(QueryCoveringDistance(rel, cov, a, b),
                  exact[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      }
    }
  }
}

TEST(CoveringReleaseTest, BudgetAudit) {
  std::mt19937_64 rng(9);
  const WeightedGraph g = MakeRandomConnected(60, 0.08, rng);
  const WeightFunction w = DyadicWeights(g, 1.0, rng);
  const Covering cov = CoverViaSpanningTree(g, 2);
  const double z = static_cast<double>(cov.size());
  const PrivacyParams p = PrivacyParams::Create(0.8, 1e-5, 0.05);
  NoiseSource src(1);
  const NoisyRelease pure =
      ReleaseCoveringDistances(g, w, cov, {1.0, 2, p}, CoveringMode::kPure, src);
  EXPECT_DOUBLE_EQ(pure.noise_scale, z * z / 0.8);
  const NoisyRelease approx =
      ReleaseCoveringDistances(g, w, cov, {1.0, 2, p}, CoveringMode::kApprox, src);
  const double per_row = z / approx.noise_scale;
  const PrivacyParams total =
      AdvancedComposition(static_cast<std::int64_t>(z), per_row, 0.0, p.delta);
  EXPECT_LE(total.epsilon, p.epsilon + 1e-12);
  EXPECT_NEAR(total.epsilon, p.epsilon, 1e-9);
  EXPECT_LE(total.delta, p.delta);
  EXPECT_NE(approx.mechanism_tag.find("advanced"), std::string::npos);
}

TEST(CoveringReleaseTest, RejectsOutOfRangeWeights) {
  const WeightedGraph g = MakePath(3);
  const Covering cov = CoverViaSpanningTree(g, 1);
  NoiseSource src(1);
  EXPECT_THROW(ReleaseCoveringDistances(g, WeightFunction({0.5, 1.5}), cov,
                                        {1.0, 1, PrivacyParams{}}, CoveringMode::kPure, src),
               InvalidArgument);
  EXPECT_THROW(ReleaseCoveringDistances(g, WeightFunction({0.5, -0.5}), cov,
                                        {1.0, 1, PrivacyParams{}}, CoveringMode::kPure, src),
               NegativeWeightError);
}

TEST(CoveringReleaseTest, SingleCenterAnswersZero) {
  const WeightedGraph g = MakePath(4);
  const Covering cov = CoverViaSpanningTree(g, 3);
  ASSERT_EQ(cov.size(), 1u);
  NoiseSource src = NoiseSource::Null();
  const NoisyRelease rel = ReleaseCoveringDistances(
      g, WeightFunction({1.0, 1.0, 1.0}), cov, {1.0, 3, PrivacyParams{}},
      CoveringMode::kPure, src);
  EXPECT_EQ(QueryCoveringDistance(rel, cov, 0, 3), 0.0);
}

// Detour bound: null-noise answers are within 2 k lambda of the truth.
TEST(CoveringReleaseProperty, DetourBound) {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 127);
    const WeightedGraph g = MakeRandomConnected(n, 0.06, rng);
    const WeightFunction w = DyadicWeights(g, 1.0, rng);
    const auto exact = AllPairsDistances(g, w);
    for (int k = 1; k <= 3; ++k) {
      const Covering cov = CoverViaSpanningTree(g, k);
      NoiseSource src = NoiseSource::Null();
      const NoisyRelease rel = ReleaseCoveringDistances(
          g, w, cov, {1.0, k, PrivacyParams{}}, CoveringMode::kPure, src);
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
          const double err = QueryCoveringDistance(rel, cov, u, v) -
                             exact[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          ASSERT_LE(std::abs(err), 2.0 * k);
        }
      }
    }
  }
}

TEST(CoveringReleaseTest, UnitGridDetourAtMostFour) {
  const WeightedGraph g = MakeGridWithVertexCount(64);
  const WeightFunction w(std::vector<double>(112, 1.0));
  const Covering cov = CoverViaSpanningTree(g, 2);
  NoiseSource src = NoiseSource::Null();
  const NoisyRelease rel =
      ReleaseCoveringDistances(g, w, cov, {1.0, 2, PrivacyParams{}}, CoveringMode::kPure, src);
  const auto exact = AllPairsDistances(g, w);
  double worst = 0.0;
  for (VertexId u = 0; u < 64; ++u) {
    for (VertexId v = 0; v < 64; ++v) {
      worst = std::max(worst, std::abs(QueryCoveringDistance(rel, cov, u, v) -
                                       exact[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]));
    }
  }
  EXPECT_LE(worst, 4.0);
}

TEST(CoveringReleaseTest, PureNoiseMagnitudeCompliance) {
  std::mt19937_64 rng(5);
  const WeightedGraph g = MakeRandomConnected(30, 0.1, rng);
  const WeightFunction w = DyadicWeights(g, 1.0, rng);
  const Covering cov = CoverViaSpanningTree(g, 2);
  const double z2 = static_cast<double>(cov.size() * cov.size());
  const PrivacyParams p = PrivacyParams::Create(1.0, 0.0, 0.1);
  const double limit = z2 / p.epsilon * std::log(z2 / p.gamma);
  int good = 0;
  for (int trial = 0; trial < 500; ++trial) {
    NoiseSource src = NoiseSource::ForTrial(8, static_cast<std::uint64_t>(trial));
    NoiseSource exact_src = NoiseSource::Null();
    const NoisyRelease noisy =
        ReleaseCoveringDistances(g, w, cov, {1.0, 2, p}, CoveringMode::kPure, src);
    const NoisyRelease exact =
        ReleaseCoveringDistances(g, w, cov, {1.0, 2, p}, CoveringMode::kPure, exact_src);
    bool ok = true;
    for (std::size_t i = 0; i < noisy.values.size(); ++i) {
      ok = ok && std::abs(noisy.values[i] - exact.values[i]) <= limit;
    }
    good += ok ? 1 : 0;
  }
  EXPECT_GE(good, 450);
}

TEST(NaiveTest, NullNoiseExactAllModes) {
  std::mt19937_64 rng(2);
  const WeightedGraph g = MakeRandomConnected(25, 0.15, rng);
  const WeightFunction w = DyadicWeights(g, 1.0, rng);
  const auto exact = AllPairsDistances(g, w);
  for (NaiveMode mode : {NaiveMode::kPure, NaiveMode::kApprox, NaiveMode::kPerturb}) {
    NoiseSource src = NoiseSource::Null();
    const NoisyRelease rel =
        NaiveAllPairs(g, w, PrivacyParams::Create(0.5, 1e-6, 0.05), mode, src);
    for (std::size_t s = 0; s < 25; ++s) {
      for (std::size_t t = 0; t < 25; ++t) {
        ASSERT_EQ(rel.values[s * 25 + t], exact[s][t]);
      }
    }
  }
}

TEST(NaiveTest, PureScale) {
  const WeightedGraph g = MakePath(10);
  NoiseSource src(1);
  const NoisyRelease rel = NaiveAllPairs(g, WeightFunction(std::vector<double>(9, 1.0)),
                                         PrivacyParams{}, NaiveMode::kPure, src);
  EXPECT_EQ(rel.noise_scale, 100.0);
}

TEST(NaiveTest, PerturbWithinBoundMostly) {
  std::mt19937_64 rng(6);
  const WeightedGraph g = MakeRandomConnected(20, 0.15, rng);
  const WeightFunction w = DyadicWeights(g, 1.0, rng);
  const auto exact = AllPairsDistances(g, w);
  const PrivacyParams p = PrivacyParams::Create(1.0, 0.0, 0.1);
  const double bound = 20.0 / p.epsilon * std::log(g.edge_count() / p.gamma);
  int good = 0;
  for (int trial = 0; trial < 200; ++trial) {
    NoiseSource src = NoiseSource::ForTrial(2, static_cast<std::uint64_t>(trial));
    const NoisyRelease rel = NaiveAllPairs(g, w, p, NaiveMode::kPerturb, src);
    bool ok = true;
    for (std::size_t s = 0; s < 20; ++s) {
      for (std::size_t t = 0; t < 20; ++t) {
        ok = ok && std::abs(rel.values[s * 20 + t] - exact[s][t]) <= bound;
      }
    }
    good += ok;
  }
  EXPECT_GE(good, 180);
}

}  // namespace
}  // namespace privgraph
