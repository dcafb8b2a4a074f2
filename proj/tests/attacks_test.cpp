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


#include "privgraph/attacks.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "privgraph/errors.hpp"
#include "privgraph/shortest_paths.hpp"

namespace privgraph {
namespace {

const GadgetKind kAllKinds[] = {GadgetKind::kSpPath, GadgetKind::kMstStar,
                                GadgetKind::kMatchingHourglass};

Bits BitsOf(std::uint64_t mask, int n) {
  Bits x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (mask >> i) & 1;
  return x;
}

TEST(GadgetTest, Counts) {
  const GadgetInstance sp = BuildGadget(GadgetKind::kSpPath, 2);
  EXPECT_EQ(sp.graph.vertex_count(), 3);
  EXPECT_EQ(sp.graph.edge_count(), 4);
  const GadgetInstance mst = BuildGadget(GadgetKind::kMstStar, 3);
  EXPECT_EQ(mst.graph.vertex_count(), 4);
  EXPECT_EQ(mst.graph.edge_count(), 6);
  const GadgetInstance hg = BuildGadget(GadgetKind::kMatchingHourglass, 2);
  EXPECT_EQ(hg.graph.vertex_count(), 8);
  EXPECT_EQ(hg.graph.edge_count(), 8);
  EXPECT_THROW(BuildGadget(GadgetKind::kSpPath, 0), InvalidArgument);
}

TEST(GadgetTest, WeightsPutOneOnOppositeEdge) {
  const GadgetInstance sp = BuildGadget(GadgetKind::kSpPath, 3);
  const WeightFunction w = sp.WeightsFor({0, 1, 1});
  EXPECT_EQ(w.values().size(), 6u);
  EXPECT_EQ(std::vector<double>(w.values().begin(), w.values().end()),
            (std::vector<double>{0, 1, 1, 0, 1, 0}));
  EXPECT_THROW(sp.WeightsFor({0, 1}), InvalidArgument);
  EXPECT_THROW(sp.WeightsFor({0, 2, 1}), InvalidArgument);
}

TEST(GadgetTest, HourglassWeightOnlyOnCrossEdge) {
  const GadgetInstance hg = BuildGadget(GadgetKind::kMatchingHourglass, 1);
  // Vertices: (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3.
  const WeightFunction w0 = hg.WeightsFor({0});
  const WeightFunction w1 = hg.WeightsFor({1});
  for (EdgeId e = 0; e < 4; ++e) {
    const Edge& ed = hg.graph.edge(e);
    EXPECT_EQ(w0[e], ed.tail == 1 && ed.head == 3 ? 1.0 : 0.0);
    EXPECT_EQ(w1[e], ed.tail == 1 && ed.head == 2 ? 1.0 : 0.0);
  }
}

// Exact releases reconstruct every input perfectly.
TEST(ReconstructionProperty, ExactIsPerfectExhaustive) {
  const GadgetMechanism exact = ExactMechanism();
  for (GadgetKind kind : kAllKinds) {
    for (int n = 1; n <= 10; ++n) {
      const GadgetInstance g = BuildGadget(kind, n);
      NoiseSource src = NoiseSource::Null();
      for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        const Bits x = BitsOf(mask, n);
        const Bits y = AdversaryReconstruct(g, exact(g, g.WeightsFor(x), src));
        ASSERT_EQ(HammingDistance(x, y), 0) << GadgetName(kind) << " n=" << n;
      }
    }
  }
}

TEST(ReconstructionProperty, ExactIsPerfectRandomized) {
  const GadgetMechanism exact = ExactMechanism();
  for (GadgetKind kind : kAllKinds) {
    for (int n : {11, 20, 40, 64}) {
      const AttackResult r = RunAttack(kind, exact, n, 20, 7);
      EXPECT_EQ(r.mean_hamming, 0.0) << GadgetName(kind) << " n=" << n;
    }
  }
}

TEST(ReconstructionTest, SimpleGraphVariant) {
  for (GadgetKind kind : {GadgetKind::kSpPath, GadgetKind::kMstStar}) {
    const GadgetInstance g = SubdivideParallelPairs(BuildGadget(kind, 6));
    for (const Edge& e : g.graph.edges()) {
      for (const Edge& f : g.graph.edges()) {
        if (e.id < f.id) {
          ASSERT_FALSE((e.tail == f.tail && e.head == f.head) ||
                       (e.tail == f.head && e.head == f.tail));
        }
      }
    }
    EXPECT_EQ(RunAttack(g, ExactMechanism(), 30, 1).mean_hamming, 0.0);
  }
}

TEST(ReconstructionTest, OneWrongEdgeCostsOneBit) {
  const GadgetInstance g = BuildGadget(GadgetKind::kSpPath, 4);
  const Bits x = {1, 0, 1, 1};
  std::vector<EdgeId> path;
  for (int i = 0; i < 4; ++i) {
    const int bit = x[static_cast<std::size_t>(i)];
    path.push_back(g.pair_edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(i == 2 ? 1 - bit : bit)]);
  }
  EXPECT_EQ(HammingDistance(x, AdversaryReconstruct(g, path)), 1);
}

TEST(ReconstructionTest, MalformedReleasesRejected) {
  const GadgetInstance sp = BuildGadget(GadgetKind::kSpPath, 3);
  EXPECT_THROW(AdversaryReconstruct(sp, std::vector<EdgeId>{0, 2}), InvalidArgument);
  EXPECT_THROW(AdversaryReconstruct(sp, std::vector<EdgeId>{0, 4, 2}), InvalidArgument);
  EXPECT_THROW(AdversaryReconstruct(sp, std::vector<EdgeId>{0, 2, 99}), InvalidArgument);
  const GadgetInstance mst = BuildGadget(GadgetKind::kMstStar, 3);
  EXPECT_THROW(AdversaryReconstruct(mst, std::vector<EdgeId>{0, 1, 2}), InvalidArgument);
  const GadgetInstance hg = BuildGadget(GadgetKind::kMatchingHourglass, 1);
  EXPECT_THROW(AdversaryReconstruct(hg, std::vector<EdgeId>{0, 1}), InvalidArgument);
  EXPECT_THROW(AdversaryReconstruct(sp, Path{{1, 2}, {2}}), InvalidArgument);
}

TEST(FloorTest, ClosedForms) {
  EXPECT_NEAR(TheoreticalFloor(100, {1e-12, 0.0, 0.05}), 50.0, 1e-9);
  const PrivacyParams small{0.01, 0.001, 0.05};
  EXPECT_GE(TheoreticalFloor(100, small), 49.0);
  EXPECT_NEAR(TheoreticalFloor(100, small) / 100.0, 0.49, 1e-2);
  // Matching gadget: n = V / 4 hourglasses.
  const int v = 400;
  EXPECT_GE(TheoreticalFloor(v / 4, small), 0.12 * v);
  EXPECT_NEAR(TheoreticalFloor(v / 4, small) / v, 0.12, 1e-2);
  const double eps = 0.3, delta = 0.01;
  EXPECT_NEAR(TheoreticalFloor(10, {eps, delta, 0.05}),
              10 * (1 - (1 + std::exp(eps)) * delta) / (1 + std::exp(2 * eps)), 1e-12);
  EXPECT_THROW(TheoreticalFloor(-1, small), InvalidArgument);
}

TEST(FloorProperty, MonotoneDecreasing) {
  double prev = TheoreticalFloor(50, {0.0, 0.0, 0.05});
  for (double eps = 0.05; eps < 3.0; eps += 0.05) {
    const double f = TheoreticalFloor(50, {eps, 0.0, 0.05});
    ASSERT_LT(f, prev);
    prev = f;
  }
  prev = TheoreticalFloor(50, {0.5, 0.0, 0.05});
  for (double delta = 0.01; delta < 0.3; delta += 0.01) {
    const double f = TheoreticalFloor(50, {0.5, delta, 0.05});
    ASSERT_LT(f, prev);
    prev = f;
  }
}

TEST(AttackTest, DeterministicAndSeedSensitive) {
  const GadgetMechanism mech = LaplaceMechanism(PrivacyParams::Create(0.5, 0.0, 0.1));
  const AttackResult a = RunAttack(GadgetKind::kSpPath, mech, 30, 10, 4);
  const AttackResult b = RunAttack(GadgetKind::kSpPath, mech, 30, 10, 4);
  ASSERT_EQ(a.trials.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(a.trials[i].input, b.trials[i].input);
    EXPECT_EQ(a.trials[i].reconstructed, b.trials[i].reconstructed);
  }
  const AttackResult c = RunAttack(GadgetKind::kSpPath, mech, 30, 10, 5);
  EXPECT_NE(a.trials[0].input, c.trials[0].input);
}

TEST(AttackTest, NullNoiseLaplaceIsExact) {
  const GadgetMechanism mech = LaplaceMechanism(PrivacyParams{});
  for (GadgetKind kind : kAllKinds) {
    const AttackResult r = RunAttack(BuildGadget(kind, 12), mech, 10, 3, /*null_noise=*/true);
    EXPECT_EQ(r.mean_hamming, 0.0);
  }
}

TEST(AttackTest, MechanismFailureCarriesTrialIndex) {
  int calls = 0;
  const GadgetMechanism flaky = [&](const GadgetInstance& g, const WeightFunction& w,
                                    NoiseSource& src) {
    if (++calls == 3) return std::vector<EdgeId>{0};
    return ExactMechanism()(g, w, src);
  };
  try {
    RunAttack(GadgetKind::kSpPath, flaky, 4, 5, 1);
    FAIL();
  } catch (const AttackTrialError& e) {
    EXPECT_EQ(e.trial(), 2);
  }
}

// Observed error of each private mechanism is at least the floor minus
// sampling slack.
TEST(AttackProperty, PrivateMechanismsRespectFloor) {
  for (double eps : {0.1, 0.5, 1.0}) {
    const PrivacyParams p = PrivacyParams::Create(eps, 0.0, 0.1);
    for (GadgetKind kind : kAllKinds) {
      const int n = 40;
      const AttackResult r = RunAttack(kind, LaplaceMechanism(p), n, 60, 11);
      EXPECT_GE(r.mean_hamming, TheoreticalFloor(n, p) - 3 * r.standard_error)
          << GadgetName(kind) << " eps=" << eps;
      const PrivacyParams weaker{2 * eps, (1 + std::exp(eps)) * p.delta, p.gamma};
      EXPECT_GE(r.mean_hamming, TheoreticalFloor(n, weaker) - 3 * r.standard_error);
    }
  }
}

TEST(AttackTest, SmallEpsilonFlipsNearHalf) {
  const PrivacyParams p = PrivacyParams::Create(0.1, 0.0, 0.1);
  for (GadgetKind kind : {GadgetKind::kSpPath, GadgetKind::kMstStar}) {
    const AttackResult r = RunAttack(kind, LaplaceMechanism(p), 100, 200, 2024);
    EXPECT_GE(r.mean_hamming, 40.0) << GadgetName(kind);
  }
}

}  // namespace
}  // namespace privgraph
