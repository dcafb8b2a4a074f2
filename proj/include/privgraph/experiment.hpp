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


#ifndef PRIVGRAPH_EXPERIMENT_HPP_
#define PRIVGRAPH_EXPERIMENT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "privgraph/attacks.hpp"
#include "privgraph/bounded_weight.hpp"
#include "privgraph/errors.hpp"
#include "privgraph/generators.hpp"
#include "privgraph/graph.hpp"
#include "privgraph/graph_io.hpp"
#include "privgraph/noise.hpp"
#include "privgraph/numeric.hpp"
#include "privgraph/path_hub.hpp"
#include "privgraph/private_shortest_paths.hpp"
#include "privgraph/private_structures.hpp"
#include "privgraph/shortest_paths.hpp"
#include "privgraph/tree_distances.hpp"

namespace privgraph {

// Where an experiment's graph and private weights come from: a privgraph v1
// file, or a seeded generator. Generated weights are dyadic (multiples of
// 1/8) in [0, max_weight]; gadgets get weights from seeded random bits.
struct GraphSource {
  std::string file;
  // gnp | grid | tree | path | bipartite | gadget-sp | gadget-mst |
  // gadget-matching
  std::string generator;
  int size = 0;  // V; bipartite: side; gadget-*: bit count n
  double p = 0.1;
  double max_weight = 1.0;
  std::uint64_t seed = 1;
  // Optional weight list replacing generated weights (path-hub input).
  std::string weights_file;
};

inline GadgetKind ParseGadgetKind(const std::string& name) {
  if (name == "sp") return GadgetKind::kSpPath;
  if (name == "mst") return GadgetKind::kMstStar;
  if (name == "matching") return GadgetKind::kMatchingHourglass;
  throw InvalidArgument("unknown gadget kind '" + name + "'");
}

inline GraphFile GenerateGraph(const GraphSource& src) {
  std::mt19937_64 rng(src.seed);
  const std::string& gen = src.generator;
  if (gen.rfind("gadget-", 0) == 0) {
    const GadgetInstance gadget = BuildGadget(ParseGadgetKind(gen.substr(7)), src.size);
    Bits x(static_cast<std::size_t>(gadget.n));
    for (int& b : x) b = static_cast<int>(rng() >> 63);
    return {gadget.graph, gadget.WeightsFor(x)};
  }
  WeightedGraph g;
  if (gen == "gnp") {
    g = MakeRandomConnected(src.size, src.p, rng);
  } else if (gen == "grid") {
    g = MakeGridWithVertexCount(src.size);
  } else if (gen == "tree") {
    g = MakeRandomTree(src.size, rng);
  } else if (gen == "path") {
    g = MakePath(src.size);
  } else if (gen == "bipartite") {
    g = MakeCompleteBipartite(src.size);
  } else {
    throw InvalidArgument("unknown generator '" + gen + "'");
  }
  if (!(src.max_weight >= 0.0)) throw InvalidArgument("max weight must be >= 0");
  return {g, DyadicWeights(g, src.max_weight, rng)};
}

inline GraphFile LoadGraph(const GraphSource& src) {
  GraphFile gf = src.file.empty() ? GenerateGraph(src) : ParseGraphFile(src.file);
  if (!src.weights_file.empty()) {
    std::vector<double> w = ParseWeightListFile(src.weights_file);
    if (w.size() != static_cast<std::size_t>(gf.graph.edge_count())) {
      throw ParseError(0, "weight file has " + std::to_string(w.size()) +
                              " values, graph has " +
                              std::to_string(gf.graph.edge_count()) + " edges");
    }
    gf.weights = WeightFunction(std::move(w));
  }
  return gf;
}

struct LabeledGraph {
  std::string name;
  GraphFile data;
};

// Deterministic test corpus of connected graphs with V <= 128: random
// connected graphs, random trees, paths, grids, complete bipartite graphs and
// the three gadget families. Weights are dyadic in [0, 1].
inline std::vector<LabeledGraph> GenerateCorpus(std::uint64_t seed) {
  std::vector<LabeledGraph> corpus;
  std::uint64_t salt = 0;
  auto add = [&](const std::string& gen, int size, double p = 0.1) {
    GraphSource src;
    src.generator = gen;
    src.size = size;
    src.p = p;
    src.seed = NoiseSource::MixSeed(seed, salt++);
    corpus.push_back({gen + "-" + std::to_string(size), GenerateGraph(src)});
  };
  const int gnp_sizes[] = {2, 3, 5, 8, 12, 17, 24, 32, 45, 64, 90, 128};
  for (int rep = 0; rep < 4; ++rep) {
    for (int v : gnp_sizes) add("gnp", v, rep % 2 == 0 ? 0.05 : 0.2);
  }
  const int tree_sizes[] = {1, 2, 3, 4, 7, 10, 16, 31, 50, 64, 100, 128};
  for (int rep = 0; rep < 2; ++rep) {
    for (int v : tree_sizes) add("tree", v);
  }
  for (int v : {2, 3, 5, 16, 33, 64, 100, 128}) add("path", v);
  for (int v : {1, 4, 9, 16, 36, 64, 100, 121}) add("grid", v);
  for (int s : {1, 2, 3, 6}) add("bipartite", s);
  for (const char* kind : {"gadget-sp", "gadget-mst", "gadget-matching"}) {
    for (int n : {1, 3, 8, 20}) add(kind, n);
  }
  return corpus;
}

struct ExperimentSpec {
  // sp | tree | path-hub | bounded | baseline | mst | matching | attack
  std::string mechanism;
  GraphSource graph;
  PrivacyParams params;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  bool null_noise = false;

  bool zero_shift = false;                             // sp
  std::vector<std::pair<VertexId, VertexId>> pairs;    // sp; empty = all pairs
  bool all_pairs = false;                              // tree
  VertexId root = 0;                                   // tree
  int levels = 0;                                      // path-hub; 0 = ceil(log2 V)
  std::string mode;                                    // bounded, baseline
  double lambda = 1.0;                                 // bounded
  int k = 0;                                           // bounded; 0 = auto
  GadgetKind gadget = GadgetKind::kSpPath;             // attack
  std::string attack_mechanism = "laplace";            // attack: exact | laplace
  int bits = 0;                                        // attack
};

struct ReportRow {
  std::int64_t trial = 0;
  std::array<std::int64_t, 2> key{0, 0};
  std::vector<std::string> cells;
};

// error vs. bound for one released quantity; bound is NaN when none applies.
struct Measurement {
  double error = 0.0;
  double bound = std::numeric_limits<double>::quiet_NaN();
};

struct ErrorReport {
  std::vector<std::string> columns;
  std::vector<ReportRow> rows;
  std::vector<Measurement> measurements;
  std::vector<std::pair<std::string, std::string>> summary;
  bool trial_column = false;

  double max_error() const {
    double m = 0.0;
    for (const auto& x : measurements) m = std::max(m, std::abs(x.error));
    return m;
  }
  double mean_error() const {
    if (measurements.empty()) return 0.0;
    double s = 0.0;
    for (const auto& x : measurements) s += std::abs(x.error);
    return s / static_cast<double>(measurements.size());
  }
  // Fraction of bounded measurements within their bound; NaN if none.
  double compliance() const {
    std::size_t with_bound = 0, ok = 0;
    for (const auto& x : measurements) {
      if (std::isnan(x.bound)) continue;
      ++with_bound;
      if (std::abs(x.error) <= x.bound) ++ok;
    }
    return with_bound == 0 ? std::numeric_limits<double>::quiet_NaN()
                           : static_cast<double>(ok) / static_cast<double>(with_bound);
  }

  void WriteCsv(std::ostream& out) const {
    auto cell = [&](const std::string& s) {
      if (s.find_first_of(",\"\n\r") == std::string::npos) {
        out << s;
        return;
      }
      out << '"';
      for (char c : s) {
        if (c == '"') out << '"';
        out << c;
      }
      out << '"';
    };
    auto line = [&](const std::vector<std::string>& cells,
                    const std::string* trial) {
      bool first = true;
      if (trial) {
        cell(*trial);
        first = false;
      }
      for (const auto& c : cells) {
        if (!first) out << ',';
        cell(c);
        first = false;
      }
      out << "\r\n";
    };
    const std::string trial_header = "trial";
    line(columns, trial_column ? &trial_header : nullptr);
    for (const auto& r : rows) {
      const std::string t = std::to_string(r.trial);
      line(r.cells, trial_column ? &t : nullptr);
    }
  }

  void WriteSummary(std::ostream& out) const {
    out << "max_error=" << FormatDouble(max_error())
        << " mean_error=" << FormatDouble(mean_error())
        << " compliance=" << FormatDouble(compliance()) << '\n';
    for (const auto& [k, v] : summary) out << k << '=' << v << '\n';
  }
};

namespace experiment_internal {

inline std::string Num(double x) { return FormatDouble(x); }
inline std::string Num(std::int64_t x) { return std::to_string(x); }

inline void ValidateSpec(const ExperimentSpec& spec) {
  static const char* kMechanisms[] = {"sp",  "tree",     "path-hub", "bounded",
                                      "baseline", "mst", "matching", "attack"};
  if (std::find(std::begin(kMechanisms), std::end(kMechanisms), spec.mechanism) ==
      std::end(kMechanisms)) {
    throw InvalidArgument("unknown mechanism '" + spec.mechanism + "'");
  }
  spec.params.Validate();
  if (spec.trials < 1) throw InvalidArgument("trials must be >= 1");
  if (spec.mechanism == "bounded" && spec.mode != "approx" && spec.mode != "pure") {
    throw InvalidArgument("bounded mode must be approx or pure");
  }
  if (spec.mechanism == "baseline" && spec.mode != "pure" &&
      spec.mode != "approx" && spec.mode != "perturb") {
    throw InvalidArgument("baseline mode must be pure, approx or perturb");
  }
  if (spec.mechanism == "attack") {
    if (spec.bits < 1) throw InvalidArgument("attack needs n >= 1");
    if (spec.attack_mechanism != "exact" && spec.attack_mechanism != "laplace") {
      throw InvalidArgument("attack mechanism must be exact or laplace");
    }
  }
  if ((spec.mechanism == "bounded" && spec.mode == "approx") ||
      (spec.mechanism == "baseline" && spec.mode == "approx")) {
    if (!(spec.params.delta > 0.0)) {
      throw InvalidArgument("approx mode needs delta > 0");
    }
    if (!(spec.params.epsilon < 1.0)) {
      throw InvalidArgument("approx mode needs epsilon < 1");
    }
  }
}

inline void RunSp(const ExperimentSpec& spec, const GraphFile& gf,
                  ErrorReport& rep) {
  const WeightedGraph& g = gf.graph;
  const WeightFunction& w = gf.weights;
  CheckNonnegative(g, w);
  rep.columns = {"s", "t", "released_len", "true_len", "opt_len", "hops", "bound"};
  std::map<VertexId, std::vector<VertexId>> targets;
  if (spec.pairs.empty()) {
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      for (VertexId t = 0; t < g.vertex_count(); ++t) {
        if (s != t) targets[s].push_back(t);
      }
    }
  } else {
    for (const auto& [s, t] : spec.pairs) {
      g.CheckVertex(s);
      g.CheckVertex(t);
      targets[s].push_back(t);
    }
  }
  std::map<VertexId, ShortestPathTree> exact;
  for (const auto& [s, ts] : targets) exact.emplace(s, ShortestPathsFrom(g, w, s));
  const int edge_count = std::max(1, g.edge_count());
  for (std::int64_t trial = 0; trial < spec.trials; ++trial) {
    NoiseSource src = NoiseSource::ForTrial(spec.seed, static_cast<std::uint64_t>(trial),
                                            spec.null_noise);
    const PerturbedWeights pw = ReleasePerturbedWeights(
        g, w, spec.params, src, spec.zero_shift ? ShiftMode::kZero : ShiftMode::kApply);
    for (const auto& [s, ts] : targets) {
      const ShortestPathTree& opt = exact.at(s);
      const ShortestPathTree released = ShortestPathsFrom(g, pw.released, s);
      for (VertexId t : ts) {
        if (!opt.reachable(t)) continue;
        const Path path = released.PathTo(t);
        const double true_len = path.Weight(w);
        const double opt_len = opt.distance[static_cast<std::size_t>(t)];
        const int hops = opt.PathTo(t).hop_length();
        const double bound = SpErrorBound(hops, spec.params, edge_count);
        rep.rows.push_back({trial, {s, t},
                            {Num(std::int64_t{s}), Num(std::int64_t{t}),
                             Num(released.distance[static_cast<std::size_t>(t)]),
                             Num(true_len), Num(opt_len), Num(std::int64_t{hops}),
                             Num(bound)}});
        rep.measurements.push_back({true_len - opt_len, bound});
      }
    }
  }
  rep.summary.emplace_back("shift", Num(ShiftTerm(spec.params, g.edge_count())));
}

inline void RunTree(const ExperimentSpec& spec, const GraphFile& gf,
                    ErrorReport& rep) {
  const WeightedGraph& g = gf.graph;
  const WeightFunction& w = gf.weights;
  const RootedTree tree(g, spec.root);
  const double gamma = spec.params.gamma;
  if (spec.all_pairs) {
    rep.columns = {"x", "y", "exact", "released", "error", "summands", "bound"};
  } else {
    rep.columns = {"v", "exact", "released", "error", "summands", "bound"};
  }
  const auto exact = spec.all_pairs
                         ? AllPairsDistances(g, w)
                         : std::vector<std::vector<double>>{
                               ShortestPathsFrom(g, w, spec.root).distance};
  for (std::int64_t trial = 0; trial < spec.trials; ++trial) {
    NoiseSource src = NoiseSource::ForTrial(spec.seed, static_cast<std::uint64_t>(trial),
                                            spec.null_noise);
    const TreeRelease rel = ReleaseSingleSource(g, tree, w, spec.params.epsilon, src);
    auto bound_for = [&](int summands) {
      return summands == 0 ? 0.0 : ConcentrationBound(rel.noise_scale, summands, gamma);
    };
    if (!spec.all_pairs) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto vi = static_cast<std::size_t>(v);
        const double ex = exact[0][vi];
        const double err = rel.distance[vi] - ex;
        const double bound = bound_for(rel.summand_count[vi]);
        rep.rows.push_back({trial, {v, 0},
                            {Num(std::int64_t{v}), Num(ex), Num(rel.distance[vi]),
                             Num(err), Num(std::int64_t{rel.summand_count[vi]}),
                             Num(bound)}});
        rep.measurements.push_back({err, bound});
      }
      continue;
    }
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
        const VertexId z = tree.LowestCommonAncestor(x, y);
        const int summands = std::max({rel.summand_count[static_cast<std::size_t>(x)],
                                       rel.summand_count[static_cast<std::size_t>(y)],
                                       rel.summand_count[static_cast<std::size_t>(z)]});
        const double ex = exact[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        const double est = AllPairsQuery(rel, tree, x, y);
        const double bound = 4.0 * bound_for(summands);
        rep.rows.push_back({trial, {x, y},
                            {Num(std::int64_t{x}), Num(std::int64_t{y}), Num(ex),
                             Num(est), Num(est - ex), Num(std::int64_t{summands}),
                             Num(bound)}});
        rep.measurements.push_back({est - ex, bound});
      }
    }
  }
}

inline void RunPathHub(const ExperimentSpec& spec, const GraphFile& gf,
                       ErrorReport& rep) {
  const WeightedGraph& g = gf.graph;
  const WeightFunction& w = gf.weights;
  const int levels = spec.levels > 0 ? spec.levels : DefaultHubLevels(g.vertex_count());
  const HubHierarchy h(g.vertex_count(), levels);
  rep.columns = {"x", "y", "exact", "released", "error", "summands", "bound"};
  const auto exact = AllPairsDistances(g, w);
  for (std::int64_t trial = 0; trial < spec.trials; ++trial) {
    NoiseSource src = NoiseSource::ForTrial(spec.seed, static_cast<std::uint64_t>(trial),
                                            spec.null_noise);
    const NoisyRelease rel = ReleaseHubDistances(g, h, w, spec.params.epsilon, src);
    for (std::int64_t x = 1; x <= h.vertex_count(); ++x) {
      for (std::int64_t y = x + 1; y <= h.vertex_count(); ++y) {
        const HubEstimate est = QueryHubDistance(h, rel, x, y);
        const double ex = exact[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)];
        const double bound =
            ConcentrationBound(rel.noise_scale, est.summand_count, spec.params.gamma);
        rep.rows.push_back({trial, {x, y},
                            {Num(x), Num(y), Num(ex), Num(est.distance),
                             Num(est.distance - ex),
                             Num(std::int64_t{est.summand_count}), Num(bound)}});
        rep.measurements.push_back({est.distance - ex, bound});
      }
    }
  }
  rep.summary.emplace_back("levels", std::to_string(levels));
}

inline void RunBounded(const ExperimentSpec& spec, const GraphFile& gf,
                       ErrorReport& rep) {
  const WeightedGraph& g = gf.graph;
  const WeightFunction& w = gf.weights;
  const CoveringMode mode =
      spec.mode == "pure" ? CoveringMode::kPure : CoveringMode::kApprox;
  const int k = spec.k > 0 ? spec.k
                           : ChooseK(g.vertex_count(), spec.lambda,
                                     spec.params.epsilon, mode);
  const Covering cov = CoverViaSpanningTree(g, k);
  const BoundedWeightConfig cfg{spec.lambda, k, spec.params};
  rep.columns = {"u", "v", "exact", "released", "error", "bound"};
  const auto exact = AllPairsDistances(g, w);
  const double z2 = static_cast<double>(cov.size() * cov.size());
  for (std::int64_t trial = 0; trial < spec.trials; ++trial) {
    NoiseSource src = NoiseSource::ForTrial(spec.seed, static_cast<std::uint64_t>(trial),
                                            spec.null_noise);
    const NoisyRelease rel = ReleaseCoveringDistances(g, w, cov, cfg, mode, src);
    const double bound = 2.0 * k * spec.lambda +
                         rel.noise_scale * std::log(z2 / spec.params.gamma);
    if (trial == 0) {
      rep.summary.emplace_back("k", std::to_string(k));
      rep.summary.emplace_back("cover_size", std::to_string(cov.size()));
      rep.summary.emplace_back("noise_scale", Num(rel.noise_scale));
      rep.summary.emplace_back("mechanism", rel.mechanism_tag);
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
        const double ex = exact[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        const double est = QueryCoveringDistance(rel, cov, u, v);
        rep.rows.push_back({trial, {u, v},
                            {Num(std::int64_t{u}), Num(std::int64_t{v}), Num(ex),
                             Num(est), Num(est - ex), Num(bound)}});
        rep.measurements.push_back({est - ex, bound});
      }
    }
  }
}

inline void RunBaseline(const ExperimentSpec& spec, const GraphFile& gf,
                        ErrorReport& rep) {
  const WeightedGraph& g = gf.graph;
  const WeightFunction& w = gf.weights;
  const NaiveMode mode = spec.mode == "pure"     ? NaiveMode::kPure
                         : spec.mode == "approx" ? NaiveMode::kApprox
                                                 : NaiveMode::kPerturb;
  rep.columns = {"s", "t", "exact", "released", "error", "bound"};
  const auto exact = AllPairsDistances(g, w);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (std::int64_t trial = 0; trial < spec.trials; ++trial) {
    NoiseSource src = NoiseSource::ForTrial(spec.seed, static_cast<std::uint64_t>(trial),
                                            spec.null_noise);
    const NoisyRelease rel = NaiveAllPairs(g, w, spec.params, mode, src);
    const double bound =
        mode == NaiveMode::kPerturb
            ? static_cast<double>(n) / spec.params.epsilon *
                  std::log(std::max(1, g.edge_count()) / spec.params.gamma)
            : rel.noise_scale * std::log(static_cast<double>(n * n) / spec.params.gamma);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = s + 1; t < n; ++t) {
        const double ex = exact[s][t];
        const double est = rel.values[s * n + t];
        rep.rows.push_back({trial, {static_cast<std::int64_t>(s), static_cast<std::int64_t>(t)},
                            {Num(static_cast<std::int64_t>(s)),
                             Num(static_cast<std::int64_t>(t)), Num(ex), Num(est),
                             Num(est - ex), Num(bound)}});
        rep.measurements.push_back({est - ex, bound});
      }
    }
  }
}

inline void RunStructure(const ExperimentSpec& spec, const GraphFile& gf,
                         ErrorReport& rep) {
  const WeightedGraph& g = gf.graph;
  const WeightFunction& w = gf.weights;
  const bool mst = spec.mechanism == "mst";
  rep.columns = {"edge", "tail", "head", "weight", "perturbed_weight"};
  const double bound =
      mst ? MstExcessBound(g, spec.params) : MatchingExcessBound(g, spec.params);
  for (std::int64_t trial = 0; trial < spec.trials; ++trial) {
    NoiseSource src = NoiseSource::ForTrial(spec.seed, static_cast<std::uint64_t>(trial),
                                            spec.null_noise);
    const StructureRelease rel = mst ? PrivateMst(g, w, spec.params, src)
                                     : PrivateMatching(g, w, spec.params, src);
    for (EdgeId e : rel.edges) {
      const Edge& ed = g.edge(e);
      rep.rows.push_back({trial, {e, 0},
                          {Num(std::int64_t{e}), Num(std::int64_t{ed.tail}),
                           Num(std::int64_t{ed.head}), Num(w[e]),
                           Num(rel.perturbed[e])}});
    }
    rep.measurements.push_back({rel.excess(), bound});
    if (spec.trials == 1) {
      rep.summary.emplace_back("true_cost", Num(rel.true_cost));
      rep.summary.emplace_back("opt_cost", Num(rel.opt_cost));
      rep.summary.emplace_back("excess", Num(rel.excess()));
    }
  }
  rep.summary.emplace_back("bound", Num(bound));
}

inline void RunAttackExperiment(const ExperimentSpec& spec, ErrorReport& rep) {
  const GadgetInstance gadget = BuildGadget(spec.gadget, spec.bits);
  const GadgetMechanism mech = spec.attack_mechanism == "exact"
                                   ? ExactMechanism()
                                   : LaplaceMechanism(spec.params);
  const AttackResult res =
      RunAttack(gadget, mech, spec.trials, spec.seed, spec.null_noise);
  rep.columns = {"trial", "hamming", "input", "reconstructed"};
  auto bits = [](const Bits& b) {
    std::string s;
    for (int x : b) s.push_back(x ? '1' : '0');
    return s;
  };
  for (std::size_t t = 0; t < res.trials.size(); ++t) {
    const auto& tr = res.trials[t];
    rep.rows.push_back({static_cast<std::int64_t>(t), {0, 0},
                        {std::to_string(t), std::to_string(tr.hamming),
                         bits(tr.input), bits(tr.reconstructed)}});
  }
  rep.summary.emplace_back("mean_hamming", Num(res.mean_hamming));
  rep.summary.emplace_back("standard_error", Num(res.standard_error));
  rep.summary.emplace_back("floor", Num(TheoreticalFloor(spec.bits, spec.params)));
}

}  // namespace experiment_internal

// Runs every trial of `spec` and compares each released quantity with the
// exact answer recomputed by the graph routines. Deterministic in
// (spec, seed): trial t uses NoiseSource::ForTrial(seed, t).
inline ErrorReport RunExperiment(const ExperimentSpec& spec) {
  using namespace experiment_internal;
  ValidateSpec(spec);
  ErrorReport rep;
  if (spec.mechanism == "attack") {
    RunAttackExperiment(spec, rep);
    return rep;
  }
  const GraphFile gf = LoadGraph(spec.graph);
  CheckWeights(gf.graph, gf.weights);
  if (spec.mechanism == "sp") {
    RunSp(spec, gf, rep);
  } else if (spec.mechanism == "tree") {
    RunTree(spec, gf, rep);
  } else if (spec.mechanism == "path-hub") {
    RunPathHub(spec, gf, rep);
  } else if (spec.mechanism == "bounded") {
    RunBounded(spec, gf, rep);
  } else if (spec.mechanism == "baseline") {
    RunBaseline(spec, gf, rep);
  } else {
    RunStructure(spec, gf, rep);
  }
  rep.trial_column = spec.trials > 1;
  std::stable_sort(rep.rows.begin(), rep.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     return std::tie(a.trial, a.key) < std::tie(b.trial, b.key);
                   });
  return rep;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_EXPERIMENT_HPP_
