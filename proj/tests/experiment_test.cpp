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


#include "privgraph/experiment.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "privgraph/errors.hpp"

namespace privgraph {
namespace {

ExperimentSpec Spec(const std::string& mechanism, const std::string& gen, int size) {
  ExperimentSpec s;
  s.mechanism = mechanism;
  s.graph.generator = gen;
  s.graph.size = size;
  s.graph.seed = 3;
  s.params = PrivacyParams::Create(0.5, 0.0, 0.1);
  s.seed = 9;
  return s;
}

std::string Csv(const ErrorReport& r) {
  std::ostringstream out;
  r.WriteCsv(out);
  return out.str();
}

TEST(ExperimentTest, NullNoiseIsExact) {
  ExperimentSpec sp = Spec("sp", "gnp", 20);
  sp.null_noise = true;
  sp.zero_shift = true;
  ExperimentSpec tree = Spec("tree", "tree", 30);
  tree.null_noise = true;
  ExperimentSpec tree_all = tree;
  tree_all.all_pairs = true;
  ExperimentSpec hub = Spec("path-hub", "path", 27);
  hub.null_noise = true;
  ExperimentSpec pure = Spec("baseline", "gnp", 15);
  pure.mode = "pure";
  pure.null_noise = true;
  ExperimentSpec perturb = pure;
  perturb.mode = "perturb";
  ExperimentSpec mst = Spec("mst", "gnp", 12);
  mst.null_noise = true;
  ExperimentSpec matching = Spec("matching", "bipartite", 5);
  matching.null_noise = true;
  for (ExperimentSpec s : {sp, tree, tree_all, hub, pure, perturb, mst, matching}) {
    s.trials = 2;
    const ErrorReport r = RunExperiment(s);
    EXPECT_FALSE(r.measurements.empty()) << s.mechanism;
    EXPECT_EQ(r.max_error(), 0.0) << s.mechanism << " " << s.mode;
  }
}

TEST(ExperimentTest, BoundedNullNoiseWithinDetour) {
  ExperimentSpec s = Spec("bounded", "grid", 64);
  s.mode = "pure";
  s.null_noise = true;
  s.k = 3;
  const ErrorReport r = RunExperiment(s);
  EXPECT_LE(r.max_error(), 2.0 * 3 * 1.0);
  EXPECT_EQ(r.compliance(), 1.0);
}

TEST(ExperimentTest, SameSeedSameBytes) {
  for (const char* mech : {"sp", "tree", "mst"}) {
    ExperimentSpec s = Spec(mech, std::string(mech) == "tree" ? "tree" : "gnp", 16);
    s.trials = 3;
    const std::string a = Csv(RunExperiment(s));
    EXPECT_EQ(a, Csv(RunExperiment(s)));
    s.seed = 10;
    EXPECT_NE(a, Csv(RunExperiment(s)));
  }
}

TEST(ExperimentTest, CsvShape) {
  ExperimentSpec s = Spec("tree", "path", 4);
  const ErrorReport one = RunExperiment(s);
  const std::string csv = Csv(one);
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")), "v,exact,released,error,summands,bound");
  EXPECT_EQ(one.rows.size(), 4u);
  s.trials = 2;
  const std::string two = Csv(RunExperiment(s));
  EXPECT_EQ(two.substr(0, 6), "trial,");
  EXPECT_NE(two.find("\r\n1,"), std::string::npos);

  ErrorReport q;
  q.columns = {"a", "b"};
  q.rows.push_back({0, {0, 0}, {"x,y", "say \"hi\""}});
  EXPECT_EQ(Csv(q), "a,b\r\n\"x,y\",\"say \"\"hi\"\"\"\r\n");
}

TEST(ExperimentTest, RowsSortedByTrialThenKey) {
  ExperimentSpec s = Spec("sp", "gnp", 10);
  s.trials = 2;
  s.pairs = {{5, 1}, {0, 3}, {5, 0}};
  const ErrorReport r = RunExperiment(s);
  ASSERT_EQ(r.rows.size(), 6u);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    EXPECT_LE(std::tie(r.rows[i - 1].trial, r.rows[i - 1].key),
              std::tie(r.rows[i].trial, r.rows[i].key));
  }
  EXPECT_EQ(r.rows[0].cells[0], "0");
  EXPECT_EQ(r.rows[2].cells[1], "1");
}

TEST(ExperimentTest, SummaryFormat) {
  ExperimentSpec s = Spec("baseline", "gnp", 8);
  s.mode = "pure";
  std::ostringstream out;
  RunExperiment(s).WriteSummary(out);
  EXPECT_EQ(out.str().rfind("max_error=", 0), 0u);
  EXPECT_NE(out.str().find(" compliance="), std::string::npos);
}

TEST(ExperimentTest, ValidationBeforeWork) {
  ExperimentSpec s = Spec("sp", "gnp", 10);
  s.mechanism = "nope";
  EXPECT_THROW(RunExperiment(s), InvalidArgument);
  s = Spec("sp", "gnp", 10);
  s.trials = 0;
  EXPECT_THROW(RunExperiment(s), InvalidArgument);
  s = Spec("sp", "gnp", 10);
  s.params.epsilon = 0.0;
  EXPECT_THROW(RunExperiment(s), InvalidArgument);
  s = Spec("bounded", "gnp", 10);
  s.mode = "weird";
  EXPECT_THROW(RunExperiment(s), InvalidArgument);
  s.mode = "approx";
  EXPECT_THROW(RunExperiment(s), InvalidArgument);  // delta = 0
  s.params.delta = 1e-6;
  s.params.epsilon = 1.5;
  EXPECT_THROW(RunExperiment(s), InvalidArgument);
  s = Spec("attack", "", 0);
  EXPECT_THROW(RunExperiment(s), InvalidArgument);
  s.bits = 4;
  s.attack_mechanism = "magic";
  EXPECT_THROW(RunExperiment(s), InvalidArgument);
  s = Spec("sp", "unknown", 10);
  EXPECT_THROW(RunExperiment(s), InvalidArgument);
  s = Spec("tree", "gnp", 10);
  s.graph.p = 0.9;
  EXPECT_THROW(RunExperiment(s), InvalidArgument);  // not a tree
}

TEST(ExperimentTest, AttackReport) {
  ExperimentSpec s = Spec("attack", "", 0);
  s.bits = 10;
  s.trials = 4;
  s.attack_mechanism = "exact";
  const ErrorReport r = RunExperiment(s);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[0].cells[1], "0");
  EXPECT_EQ(r.rows[0].cells[2], r.rows[0].cells[3]);
  EXPECT_EQ(r.rows[0].cells[2].size(), 10u);
}

TEST(ExperimentTest, WeightFileOverride) {
  const std::string dir = ::testing::TempDir();
  const std::string good = dir + "/w_good.txt";
  const std::string bad = dir + "/w_bad.txt";
  {
    std::ofstream(good) << "1 2 3\n";
    std::ofstream(bad) << "1 2\n";
  }
  GraphSource src;
  src.generator = "path";
  src.size = 4;
  src.weights_file = good;
  const GraphFile gf = LoadGraph(src);
  EXPECT_EQ(gf.weights[2], 3.0);
  src.weights_file = bad;
  EXPECT_THROW(LoadGraph(src), ParseError);
}

TEST(CorpusTest, ShapeAndDeterminism) {
  const auto corpus = GenerateCorpus(42);
  EXPECT_GE(corpus.size(), 100u);
  std::set<std::string> kinds;
  for (const auto& item : corpus) {
    EXPECT_GE(item.data.graph.vertex_count(), 1);
    EXPECT_LE(item.data.graph.vertex_count(), 128);
    kinds.insert(item.name.substr(0, item.name.rfind('-')));
  }
  EXPECT_EQ(kinds.size(), 8u);
  const auto again = GenerateCorpus(42);
  ASSERT_EQ(again.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(WriteGraphString(corpus[i].data.graph, corpus[i].data.weights),
              WriteGraphString(again[i].data.graph, again[i].data.weights));
  }
}

TEST(CorpusTest, GeneratorSizes) {
  GraphSource src;
  src.generator = "grid";
  src.size = 64;
  EXPECT_EQ(GenerateGraph(src).graph.edge_count(), 112);
  src.generator = "tree";
  src.size = 10;
  EXPECT_EQ(GenerateGraph(src).graph.edge_count(), 9);
  src.generator = "gadget-matching";
  src.size = 5;
  EXPECT_EQ(GenerateGraph(src).graph.vertex_count(), 20);
}

TEST(ExperimentProperty, TreeAllPairsCompliance) {
  ExperimentSpec s = Spec("tree", "tree", 128);
  s.params = PrivacyParams::Create(1.0, 0.0, 0.05);
  s.all_pairs = true;
  s.trials = 3;
  const ErrorReport r = RunExperiment(s);
  EXPECT_GE(r.compliance(), 0.95);
}

}  // namespace
}  // namespace privgraph
