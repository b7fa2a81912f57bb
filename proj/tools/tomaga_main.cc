// Copyright 2026 The ToMAGA Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: analyze, matrix-selfplay, tournament, gridworld.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tomaga/config.h"
#include "tomaga/equilibrium.h"
#include "tomaga/grid_experiments.h"
#include "tomaga/matrix_experiments.h"
#include "tomaga/output.h"
#include "tomaga/policy_learner.h"
#include "tomaga/rng.h"

namespace tomaga {
namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::string config_path;
  std::uint64_t seed = 42;
  std::string out_dir = "out";
  int jobs = 1;
};

std::string Label3(PolicyLabel l) { return std::string(1, LabelChar(l)); }

WorkbenchConfig ResolveConfig(const GlobalOptions& g) {
  if (g.config_path.empty()) return DefaultConfig();
  return LoadConfig(g.config_path);
}

fs::path PrepareOut(const GlobalOptions& g) {
  fs::path out(g.out_dir);
  fs::create_directories(out);
  return out;
}

int RunAnalyze(const GlobalOptions& g, std::optional<double> phi_step) {
  WorkbenchConfig config = ResolveConfig(g);
  if (phi_step) config.analyze.phi_step = *phi_step;
  const fs::path out = PrepareOut(g);
  CsvWriter csv(out / "analyze.csv",
                {"h", "c", "m", "g", "phi", "theta", "n_pure_ne", "unique_cc",
                 "formula_unique_cc", "threshold"});
  Manifest manifest{"analyze", ConfigToJson(config), g.seed, {}, g.jobs,
                    {"analyze.csv"}};
  const AnalyzeConfig& a = config.analyze;
  const std::vector<double> thetas =
      OpenClosedGrid(a.theta.lo, a.theta.hi, a.theta.step);
  nlohmann::json summary = nlohmann::json::array();
  for (const PayoffMatrix& m : a.matrices) {
    const std::vector<double> phis = OpenClosedGrid(m.m(), m.h(), a.phi_step);
    std::int64_t mismatches = 0;
    for (double phi : phis) {
      for (double theta : thetas) {
        const EquilibriumReport r =
            PureNash(TransformGame(m, phi, phi, theta, theta));
        const bool formula = ThresholdConditionHolds(m, phi, theta);
        if (formula != r.is_unique_cc) ++mismatches;
        csv << m.h() << m.c() << m.m() << m.g() << phi << theta
            << static_cast<int>(r.pure_equilibria.size()) << r.is_unique_cc
            << formula << r.threshold_theta;
        csv.EndRow();
      }
    }
    const std::int64_t cells =
        static_cast<std::int64_t>(phis.size() * thetas.size());
    std::cout << "payoffs (" << m.h() << "," << m.c() << "," << m.m() << ","
              << m.g() << "): " << cells << " cells, " << mismatches
              << " mismatches between enumeration and threshold formula\n";
    summary.push_back({{"payoffs", PayoffsToJson(m)},
                       {"cells", cells},
                       {"mismatches", mismatches}});
  }
  manifest.notes["threshold_agreement"] = summary;
  WriteManifest(out, manifest);
  return 0;
}

void WriteSelfPlayTrace(const fs::path& path, const SweepSpec& spec,
                        AgentKind kind, double p1, double p2,
                        std::uint64_t seed) {
  CsvWriter csv(path, {"variant", "iteration", "agent", "action", "material",
                       "phi", "psychological", "shaped", "zero_order",
                       "first_order", "confidence", "value_c", "value_u",
                       "p_cooperative"});
  auto make = [&](double own, double other) {
    MatrixAgentConfig c = spec.agent;
    c.kind = kind;
    if (spec.belief_init == BeliefInit::kFromCell) {
      c.tom.zero_order = Belief(other);
      c.tom.first_order = Belief(own);
    }
    return MakeMatrixAgent(c, own);
  };
  MatrixAgent a = make(p1, p2);
  MatrixAgent b = make(p2, p1);
  Rng rng(seed);
  for (int t = 0; t < spec.iterations; ++t) {
    const MatrixIterationRecord rec =
        PlayMatrixIteration(a, b, spec.matrix, rng);
    for (int k = 0; k < 2; ++k) {
      const AgentStepLog& l = rec.agents[k];
      csv << AgentKindName(kind) << t << k
          << std::string(1, LabelChar(l.action)) << l.material << l.phi
          << l.psychological << l.shaped << l.zero_order << l.first_order
          << l.confidence << l.value_c << l.value_u << l.p_cooperative;
      csv.EndRow();
    }
  }
}

int RunSelfPlay(const GlobalOptions& g, std::optional<int> repetitions,
                const std::vector<double>& trace_cell) {
  WorkbenchConfig config = ResolveConfig(g);
  if (repetitions) config.selfplay.repetitions = *repetitions;
  const SweepSpec& spec = config.selfplay;
  const fs::path out = PrepareOut(g);
  const SweepResult result = RunSweep(spec, g.seed, g.jobs);
  CsvWriter csv(out / "selfplay.csv",
                {"variant", "p1", "p2", "mean_final_p", "var_final_p",
                 "mean_tail_freq", "repetitions"});
  for (const SweepCell& c : result.cells) {
    csv << AgentKindName(c.variant) << c.p1 << c.p2 << c.mean_final_p
        << c.var_final_p << c.mean_tail_freq << spec.repetitions;
    csv.EndRow();
  }
  Manifest manifest{"matrix-selfplay", ConfigToJson(config), g.seed, {},
                    g.jobs, {"selfplay.csv"}};
  manifest.notes["seed_rule"] =
      "repetition r of cell (i1, i2) uses DeriveSeed(base_seed, {i1, i2, r}) "
      "for every variant";
  nlohmann::json means = nlohmann::json::object();
  for (AgentKind k : spec.variants) {
    const double m = MeanFinalCooperation(result, k);
    means[std::string(AgentKindName(k))] = m;
    std::cout << AgentKindName(k) << ": mean final P(C) = " << m << "\n";
  }
  manifest.notes["mean_final_p"] = means;
  if (!trace_cell.empty()) {
    for (AgentKind k : spec.variants) {
      WriteSelfPlayTrace(out / ("selfplay_trace_" +
                                std::string(AgentKindName(k)) + ".csv"),
                         spec, k, trace_cell[0], trace_cell[1],
                         DeriveSeed(g.seed, {0xACE}));
      manifest.outputs.push_back("selfplay_trace_" +
                                 std::string(AgentKindName(k)) + ".csv");
    }
  }
  WriteManifest(out, manifest);
  return 0;
}

int RunTournamentCmd(const GlobalOptions& g, std::optional<int> seeds,
                     std::optional<int> rounds) {
  WorkbenchConfig config = ResolveConfig(g);
  TournamentConfig& t = config.tournament;
  if (seeds) t.seeds = *seeds;
  if (rounds) t.base.rounds = *rounds;
  const fs::path out = PrepareOut(g);
  const std::vector<std::uint64_t> seed_list = SeedList(g.seed, 0x70, t.seeds);
  CsvWriter runs(out / "tournament_runs.csv",
                 {"composition", "group_size", "seed", "window_mean"});
  CsvWriter summary(out / "tournament.csv",
                    {"composition", "group_size", "mean", "variance", "seeds"});
  for (int n : t.group_sizes) {
    for (Composition c : t.compositions) {
      TournamentSpec spec = t.base;
      spec.group_size = n;
      spec.composition = c;
      const TournamentResult r = RunTournament(spec, seed_list, g.jobs);
      for (const TournamentRun& run : r.runs) {
        runs << CompositionName(c) << n << run.seed << run.window_mean;
        runs.EndRow();
      }
      summary << CompositionName(c) << n << r.mean << r.variance << t.seeds;
      summary.EndRow();
      std::cout << CompositionName(c) << " N=" << n
                << ": last-window common reward " << r.mean << "\n";
    }
  }
  Manifest manifest{"tournament", ConfigToJson(config), g.seed, seed_list,
                    g.jobs, {"tournament.csv", "tournament_runs.csv"}};
  manifest.notes["common_reward"] =
      "arithmetic mean of material rewards over agents that played in the "
      "round; with an odd group one uniformly chosen agent sits out";
  WriteManifest(out, manifest);
  return 0;
}

struct GridCliOptions {
  std::string scenario = "all";
  std::string agent = "all";
  std::optional<double> theta;
  std::optional<int> seeds;
  std::optional<int> iterations;
};

int RunGridworldCmd(const GlobalOptions& g, const GridCliOptions& o) {
  WorkbenchConfig config = ResolveConfig(g);
  GridComparisonSpec& spec = config.gridworld.spec;
  if (o.theta) spec.agent.theta = *o.theta;
  if (o.seeds) config.gridworld.seeds = *o.seeds;
  if (o.iterations) spec.options.iterations = *o.iterations;
  if (o.scenario != "all") {
    std::erase_if(spec.scenarios,
                  [&](const NamedScenario& s) { return s.name != o.scenario; });
    if (spec.scenarios.empty()) {
      throw std::invalid_argument("unknown scenario: " + o.scenario);
    }
  }
  if (o.agent != "all") {
    auto kind = ParseAgentKind(o.agent);
    if (!kind) throw std::invalid_argument("unknown agent type: " + o.agent);
    spec.variants = {*kind};
  }
  spec.seeds = SeedList(g.seed, 0x6D, config.gridworld.seeds);
  spec.options.keep_logs = true;
  const fs::path out = PrepareOut(g);
  const std::vector<GridComparisonCell> cells =
      RunGridworldComparison(spec, g.jobs);

  CsvWriter runs(out / "gridworld_runs.csv",
                 {"scenario", "variant", "seed", "iterations_to_threshold"});
  CsvWriter summary(out / "gridworld.csv",
                    {"scenario", "variant", "reached", "seeds",
                     "median_iterations_to_threshold"});
  CsvWriter curves(out / "gridworld_curves.csv",
                   {"scenario", "variant", "seed", "iteration", "label_0",
                    "label_1", "prop_c", "prop_u", "prop_unknown", "event",
                    "material_0", "material_1", "shaped_0", "shaped_1",
                    "zero_order_0", "first_order_0", "confidence_0",
                    "zero_order_1", "first_order_1", "confidence_1"});
  const int window = spec.options.window;
  for (const GridComparisonCell& cell : cells) {
    summary << cell.scenario << AgentKindName(cell.variant) << cell.reached
            << static_cast<int>(cell.runs.size()) << cell.median_iterations;
    summary.EndRow();
    std::cout << cell.scenario << " " << AgentKindName(cell.variant)
              << ": reached " << cell.reached << "/" << cell.runs.size()
              << ", median iterations " << cell.median_iterations << "\n";
    for (const GridRun& run : cell.runs) {
      runs << cell.scenario << AgentKindName(cell.variant) << run.seed
           << run.iterations_to_threshold;
      runs.EndRow();
      const auto props =
          ClassifyRun(run.labels, std::min<int>(window, run.labels.size()));
      for (std::size_t t = 0; t < run.labels.size(); ++t) {
        const IterationLog& l = run.logs[t];
        const auto& p = props[t];
        curves << cell.scenario << AgentKindName(cell.variant) << run.seed
               << static_cast<int>(t) << Label3(run.labels[t][0])
               << Label3(run.labels[t][1])
               << 0.5 * (p[0].cooperative + p[1].cooperative)
               << 0.5 * (p[0].uncooperative + p[1].uncooperative)
               << 0.5 * (p[0].unknown + p[1].unknown)
               << TerminationName(l.event) << l.agents[0].material
               << l.agents[1].material << l.agents[0].shaped
               << l.agents[1].shaped << l.agents[0].zero_order
               << l.agents[0].first_order << l.agents[0].confidence
               << l.agents[1].zero_order << l.agents[1].first_order
               << l.agents[1].confidence;
        curves.EndRow();
      }
    }
  }
  Manifest manifest{"gridworld", ConfigToJson(config), g.seed, spec.seeds,
                    g.jobs,
                    {"gridworld.csv", "gridworld_runs.csv",
                     "gridworld_curves.csv"}};
  manifest.notes["threshold_rule"] =
      "first iteration with a full trailing window whose C share, averaged "
      "over both agents, reaches the threshold; unreached runs count as inf";
  manifest.notes["seed_rule"] =
      "seed k of scenario s runs on DeriveSeed(seeds[k], {Fnv1a64(name of "
      "s)}) for every variant";
  WriteManifest(out, manifest);
  return 0;
}

}  // namespace
}  // namespace tomaga

int main(int argc, char** argv) {
  using namespace tomaga;
  CLI::App app{"Guilt-averse theory-of-mind agents for Stag Hunt games"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config_path, "JSON experiment config")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Base seed")->capture_default_str();
  app.add_option("--out", g.out_dir, "Output directory")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads (0 = all cores)")
      ->capture_default_str();

  std::optional<double> phi_step;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Equilibria of the guilt-transformed game");
  analyze->add_option("--phi-step", phi_step, "Step of the phi grid");

  std::optional<int> reps;
  std::vector<double> trace_cell;
  CLI::App* selfplay = app.add_subcommand(
      "matrix-selfplay", "Initial-probability sweep of matrix self-play");
  selfplay->add_option("--repetitions", reps, "Repetitions per cell");
  selfplay->add_option("--trace-cell", trace_cell,
                       "Also log every iteration of one run at P1 P2")
      ->expected(2);

  std::optional<int> t_seeds, t_rounds;
  CLI::App* tournament =
      app.add_subcommand("tournament", "Random-matching group tournament");
  tournament->add_option("--seeds", t_seeds, "Number of seeds");
  tournament->add_option("--rounds", t_rounds, "Rounds per run");

  GridCliOptions grid;
  CLI::App* gridworld =
      app.add_subcommand("gridworld", "Grid-world learning comparison");
  gridworld->add_option("--scenario", grid.scenario,
                        "Scenario name from the config, or all")
      ->capture_default_str();
  gridworld->add_option("--agent", grid.agent,
                        "individual|inequity|ga-no-tom|tomaga|tom-no-guilt|all")
      ->capture_default_str();
  gridworld->add_option("--theta", grid.theta, "Guilt sensitivity");
  gridworld->add_option("--seeds", grid.seeds, "Number of seeds");
  gridworld->add_option("--iterations", grid.iterations, "Iterations per run");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analyze) return RunAnalyze(g, phi_step);
    if (*selfplay) return RunSelfPlay(g, reps, trace_cell);
    if (*tournament) return RunTournamentCmd(g, t_seeds, t_rounds);
    if (*gridworld) return RunGridworldCmd(g, grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
