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


// privgraph: command-line front end for the private graph mechanisms.
//
//   privgraph sp --graph g.txt --epsilon 1 --gamma 0.1 --seed 7 --all-pairs
//   privgraph gen --kind grid --size 64 --seed 1 --out grid.txt
//
// Report CSV goes to --out (default stdout); the summary goes to stderr.
// Exit codes: 0 success, 2 precondition violation, 3 parse error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "privgraph/errors.hpp"
#include "privgraph/experiment.hpp"
#include "privgraph/graph_io.hpp"

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitParse = 3;

struct GlobalFlags {
  std::uint64_t seed = 0;
  bool null_noise = false;
  std::string out;
};

struct Options {
  privgraph::ExperimentSpec spec;
  double epsilon = 1.0;
  double delta = 0.0;
  double gamma = 0.05;
  std::string pairs_file;
  bool single_source = false;
  std::int64_t path_vertices = 0;
  bool auto_k = false;
  std::string gadget = "sp";
};

void AddGraphOptions(CLI::App* cmd, Options& o) {
  auto& src = o.spec.graph;
  cmd->add_option("--graph", src.file, "Graph file (privgraph v1 format)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--generator", src.generator,
                  "Generate instead: gnp|grid|tree|path|bipartite|"
                  "gadget-sp|gadget-mst|gadget-matching");
  cmd->add_option("--size", src.size, "Generator size (V, side or n)");
  cmd->add_option("--p", src.p, "Edge probability for gnp");
  cmd->add_option("--max-weight", src.max_weight, "Generated weights lie in [0, this]");
  cmd->add_option("--graph-seed", src.seed, "Generator seed");
}

void AddPrivacyOptions(CLI::App* cmd, Options& o, bool with_delta) {
  cmd->add_option("--epsilon", o.epsilon, "Privacy parameter epsilon");
  if (with_delta) cmd->add_option("--delta", o.delta, "Privacy parameter delta");
  cmd->add_option("--gamma", o.gamma, "Failure probability for bounds");
  cmd->add_option("--trials", o.spec.trials, "Independent trials");
}

void RequireGraph(const Options& o) {
  if (o.spec.graph.file.empty() && o.spec.graph.generator.empty()) {
    throw privgraph::InvalidArgument("one of --graph or --generator is required");
  }
}

int WriteReport(const privgraph::ErrorReport& rep, const GlobalFlags& flags) {
  if (flags.out.empty()) {
    rep.WriteCsv(std::cout);
  } else {
    std::ofstream out(flags.out, std::ios::binary);
    if (!out) throw privgraph::InvalidArgument("cannot open " + flags.out);
    rep.WriteCsv(out);
  }
  rep.WriteSummary(std::cerr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private graph distances and structures"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "Master seed");
  app.add_flag("--null-noise", flags.null_noise, "Replace every noise draw by 0");
  app.add_option("--out", flags.out, "Write CSV here instead of stdout");

  Options o;
  auto& spec = o.spec;

  auto* sp = app.add_subcommand("sp", "Perturbed-weight shortest paths");
  AddGraphOptions(sp, o);
  AddPrivacyOptions(sp, o, false);
  sp->add_option("--pairs", o.pairs_file, "File of 's t' lines")->check(CLI::ExistingFile);
  sp->add_flag("--all-pairs", "Query every ordered pair (default)");
  sp->add_flag("--zero-shift", spec.zero_shift, "Drop the additive shift term");

  auto* tree = app.add_subcommand("tree", "Tree distances");
  AddGraphOptions(tree, o);
  AddPrivacyOptions(tree, o, false);
  tree->add_option("--root", spec.root, "Root vertex");
  auto* ap = tree->add_flag("--all-pairs", spec.all_pairs, "All-pairs via LCA");
  tree->add_flag("--single-source", o.single_source, "Distances from the root")
      ->excludes(ap);

  auto* hub = app.add_subcommand("path-hub", "Distances on a path via hub levels");
  AddPrivacyOptions(hub, o, false);
  hub->add_option("--V", o.path_vertices, "Path length in vertices")->required();
  hub->add_option("--weights", spec.graph.weights_file, "One weight per line")
      ->check(CLI::ExistingFile);
  hub->add_option("--k", spec.levels, "Hierarchy levels (default ceil(log2 V))");
  hub->add_option("--graph-seed", spec.graph.seed, "Seed for generated weights");
  hub->add_option("--max-weight", spec.graph.max_weight, "Generated weights lie in [0, this]");

  auto* bounded = app.add_subcommand("bounded", "Bounded-weight all-pairs distances");
  AddGraphOptions(bounded, o);
  AddPrivacyOptions(bounded, o, true);
  bounded->add_option("--lambda", spec.lambda, "Weight bound");
  bounded->add_option("--mode", spec.mode, "approx|pure")->required();
  auto* kopt = bounded->add_option("--k", spec.k, "Covering radius");
  bounded->add_flag("--auto-k", o.auto_k, "Pick k from V, lambda, epsilon")
      ->excludes(kopt);

  auto* baseline = app.add_subcommand("baseline", "Naive all-pairs baselines");
  AddGraphOptions(baseline, o);
  AddPrivacyOptions(baseline, o, true);
  baseline->add_option("--mode", spec.mode, "pure|approx|perturb")->required();

  auto* mst = app.add_subcommand("mst", "Private minimum spanning tree");
  AddGraphOptions(mst, o);
  AddPrivacyOptions(mst, o, false);

  auto* matching = app.add_subcommand("matching", "Private min-weight perfect matching");
  AddGraphOptions(matching, o);
  AddPrivacyOptions(matching, o, false);

  auto* attack = app.add_subcommand("attack", "Reconstruction attack on a gadget");
  AddPrivacyOptions(attack, o, true);
  attack->add_option("--kind", o.gadget, "sp|mst|matching")->required();
  attack->add_option("--mechanism", spec.attack_mechanism, "exact|laplace");
  attack->add_option("--n", spec.bits, "Number of hidden bits")->required();

  auto* gen = app.add_subcommand("gen", "Write a generated graph file");
  std::string gen_kind;
  gen->add_option("--kind", gen_kind,
                  "gnp|grid|tree|path|bipartite|gadget-sp|gadget-mst|gadget-matching")
      ->required();
  gen->add_option("--size", spec.graph.size, "V, side or n")->required();
  gen->add_option("--p", spec.graph.p, "Edge probability for gnp");
  gen->add_option("--max-weight", spec.graph.max_weight, "Weights lie in [0, this]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "gen") {
      spec.graph.generator = gen_kind;
      spec.graph.seed = flags.seed;
      const privgraph::GraphFile gf = privgraph::GenerateGraph(spec.graph);
      if (flags.out.empty()) {
        privgraph::WriteGraph(std::cout, gf.graph, gf.weights);
      } else {
        std::ofstream out(flags.out, std::ios::binary);
        if (!out) throw privgraph::InvalidArgument("cannot open " + flags.out);
        privgraph::WriteGraph(out, gf.graph, gf.weights);
      }
      return 0;
    }
    spec.mechanism = name;
    spec.seed = flags.seed;
    spec.null_noise = flags.null_noise;
    spec.params = privgraph::PrivacyParams::Create(o.epsilon, o.delta, o.gamma);
    if (name == "path-hub") {
      if (o.path_vertices < 2 || o.path_vertices > 100000000) {
        throw privgraph::InvalidArgument("--V must lie in [2, 1e8]");
      }
      spec.graph.generator = "path";
      spec.graph.size = static_cast<int>(o.path_vertices);
    } else if (name == "attack") {
      spec.gadget = privgraph::ParseGadgetKind(o.gadget);
    } else {
      RequireGraph(o);
    }
    if (!o.pairs_file.empty()) spec.pairs = privgraph::ParsePairListFile(o.pairs_file);
    if (o.auto_k) spec.k = 0;
    return WriteReport(privgraph::RunExperiment(spec), flags);
  } catch (const privgraph::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const privgraph::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
