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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances are fixed here.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tomaga/config.h"
#include "tomaga/equilibrium.h"
#include "tomaga/grid_experiments.h"
#include "tomaga/guilt.h"
#include "tomaga/matrix_agents.h"
#include "tomaga/matrix_experiments.h"
#include "tomaga/policy_learner.h"
#include "tomaga/rng.h"
#include "tomaga/tom_beliefs.h"

namespace tomaga {
namespace {

// Same base seed as the command-line default, so every experiment below is
// reproducible with the CLI.
constexpr std::uint64_t kBaseSeed = 42;
constexpr double kEquilibriumStep = 0.05;
constexpr double kThetaMax = 50.0;
constexpr double kSelfPlayMargin = 0.05;
constexpr int kMinReached = 8;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Check = std::function<Outcome()>;

bool RunCriterion(int id, const std::string& name, double budget_s,
                  const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = check();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  const bool in_time = secs <= budget_s;
  const bool pass = out.pass && in_time;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name
            << ") " << out.detail << " [" << secs << " s, budget " << budget_s
            << " s" << (in_time ? "" : ", over budget") << "]" << std::endl;
  return pass;
}

const std::vector<PayoffMatrix>& EquilibriumGames() {
  static const std::vector<PayoffMatrix> games = {
      PayoffMatrix::Create(40, 30, 20, 0), PayoffMatrix::Create(5, 4, 2, 1)};
  return games;
}

Outcome ThresholdAgreement() {
  const std::vector<double> thetas = OpenClosedGrid(0, kThetaMax, kEquilibriumStep);
  std::ostringstream d;
  bool pass = true;
  for (const PayoffMatrix& m : EquilibriumGames()) {
    const std::vector<double> phis = OpenClosedGrid(m.m(), m.h(), kEquilibriumStep);
    const ThresholdAgreementCheck c = CheckThresholdAgreement(m, phis, thetas);
    pass = pass && c.holds() &&
           c.cells_checked == static_cast<std::int64_t>(phis.size() * thetas.size());
    d << "(" << m.h() << "," << m.c() << "," << m.m() << "," << m.g()
      << "): " << c.mismatches << " mismatches in " << c.cells_checked
      << " cells; ";
  }
  return {pass, d.str()};
}

Outcome Monotonicity() {
  std::ostringstream d;
  bool pass = true;
  for (const PayoffMatrix& m : EquilibriumGames()) {
    double last_f = std::numeric_limits<double>::infinity();
    int f_violations = 0;
    for (int k = 1; k <= 1000; ++k) {
      const double f = GuiltThresholdF(m, 0.1 * k);
      if (!(f < last_f)) ++f_violations;
      last_f = f;
    }
    const std::vector<double> phis = OpenClosedGrid(m.m(), m.h(), kEquilibriumStep);
    const std::vector<double> thetas =
        OpenClosedGrid(0, kThetaMax, kEquilibriumStep);
    double last_frac = -1.0;
    int frac_violations = 0;
    for (double theta : thetas) {
      int unique = 0;
      for (double phi : phis) {
        unique += PureNash(TransformGame(m, phi, phi, theta, theta)).is_unique_cc;
      }
      const double frac = static_cast<double>(unique) / phis.size();
      if (frac < last_frac) ++frac_violations;
      last_frac = frac;
    }
    pass = pass && f_violations == 0 && frac_violations == 0;
    d << "(" << m.h() << "," << m.c() << "," << m.m() << "," << m.g()
      << "): f violations " << f_violations << ", fraction violations "
      << frac_violations << ", final fraction " << last_frac << "; ";
  }
  return {pass, d.str()};
}

Outcome SpotCheck() {
  constexpr Label kC = Label::kCooperative;
  constexpr Label kU = Label::kUncooperative;
  const TransformedGame t =
      TransformGame(PayoffMatrix::Create(40, 30, 20, 0), 40, 40, 200, 200);
  const bool cells = t.at(kC, kC) == CellPayoffs{40, 40} &&
                     t.at(kC, kU) == CellPayoffs{-2000, -7970} &&
                     t.at(kU, kC) == CellPayoffs{-7970, -2000} &&
                     t.at(kU, kU) == CellPayoffs{-3980, -3980};
  const EquilibriumReport r = PureNash(t);
  std::ostringstream d;
  d << "cells " << (cells ? "match" : "differ") << ", "
    << r.pure_equilibria.size() << " pure equilibria, unique (C,C) "
    << (r.is_unique_cc ? "yes" : "no");
  return {cells && r.is_unique_cc, d.str()};
}

Outcome SelfPlay() {
  const SweepSpec spec = DefaultConfig().selfplay;
  const SweepResult r = RunSweep(spec, kBaseSeed, 0);
  const double tomaga = MeanFinalCooperation(r, AgentKind::kToMAGA);
  const double ga = MeanFinalCooperation(r, AgentKind::kGuiltNoToM);
  const CornerGaps gaps = CornerGap(r, AgentKind::kToMAGA, AgentKind::kGuiltNoToM);
  const bool a = tomaga - ga >= kSelfPlayMargin;
  const bool b = gaps.low > gaps.high;
  std::ostringstream d;
  d << "mean final P(C) tomaga " << tomaga << " vs ga-no-tom " << ga
    << " (margin " << tomaga - ga << ", need >= " << kSelfPlayMargin
    << "): " << (a ? "ok" : "not met") << "; corner gap low " << gaps.low
    << " vs high " << gaps.high << ": " << (b ? "ok" : "not met");
  return {a && b, d.str()};
}

Outcome Tournament() {
  const TournamentConfig t = DefaultConfig().tournament;
  const std::vector<std::uint64_t> seeds = SeedList(kBaseSeed, 0x70, t.seeds);
  std::ostringstream d;
  bool pass = true;
  for (int n : {2, 4, 8}) {
    std::array<double, 3> mean{};
    int idx = 0;
    for (Composition c : {Composition::kHomogeneousToMAGA,
                          Composition::kHomogeneousPavlov,
                          Composition::kHeterogeneous}) {
      TournamentSpec spec = t.base;
      spec.group_size = n;
      spec.composition = c;
      mean[idx++] = RunTournament(spec, seeds, 0).mean;
    }
    const bool homo = mean[0] >= mean[1];
    const bool het = n > 4 || mean[2] >= mean[1];
    pass = pass && homo && het;
    d << "N=" << n << ": tomaga " << mean[0] << ", pavlov " << mean[1]
      << ", heterogeneous " << mean[2] << (homo && het ? "" : " (violated)")
      << "; ";
  }
  return {pass, d.str()};
}

Outcome Gridworld() {
  GridworldConfig g = DefaultConfig().gridworld;
  GridComparisonSpec& spec = g.spec;
  spec.seeds = SeedList(kBaseSeed, 0x6D, g.seeds);
  const std::vector<GridComparisonCell> cells = RunGridworldComparison(spec, 0);
  auto find = [&](const std::string& scenario, AgentKind k) -> const GridComparisonCell& {
    for (const GridComparisonCell& c : cells) {
      if (c.scenario == scenario && c.variant == k) return c;
    }
    throw std::runtime_error("missing cell " + scenario);
  };
  const auto& tomaga = find("near-hares", AgentKind::kToMAGA);
  const auto& ga = find("near-hares", AgentKind::kGuiltNoToM);
  const auto& ineq = find("near-hares", AgentKind::kInequity);
  const auto& ind = find("near-hares", AgentKind::kIndividual);
  const int seeds = static_cast<int>(spec.seeds.size());
  const bool order = std::isfinite(tomaga.median_iterations) &&
                     tomaga.median_iterations <= ga.median_iterations &&
                     ga.median_iterations <= ineq.median_iterations;
  const bool individual = seeds - ind.reached >= kMinReached;
  bool social = true;
  std::ostringstream d;
  d << "near-hares medians tomaga " << tomaga.median_iterations << ", ga-no-tom "
    << ga.median_iterations << ", inequity " << ineq.median_iterations
    << (order ? "" : " (order violated)") << "; individual unreached "
    << seeds - ind.reached << "/" << seeds << "; near-stag reached";
  for (AgentKind k : {AgentKind::kInequity, AgentKind::kGuiltNoToM,
                      AgentKind::kToMAGA}) {
    const auto& c = find("near-stag", k);
    social = social && c.reached >= kMinReached;
    d << " " << AgentKindName(k) << " " << c.reached << "/" << seeds;
  }
  return {order && individual && social, d.str()};
}

Outcome Invariants() {
  std::vector<std::string> failures;
  const PayoffMatrix game = PayoffMatrix::Create(40, 30, 20, 0);
  Rng rng(kBaseSeed);

  ToMState s;
  for (int i = 0; i < 100000; ++i) {
    s = UpdateBeliefs(s, rng.Bernoulli(0.5) ? Label::kCooperative
                                            : Label::kUncooperative,
                      rng.Bernoulli(0.5) ? Label::kCooperative
                                         : Label::kUncooperative,
                      game);
    const double v[] = {s.confidence, s.zero_order.p_cooperative(),
                        s.first_order.p_cooperative()};
    for (double x : v) {
      if (!(x >= 0.0 && x <= 1.0)) {
        failures.push_back("belief range");
        i = 100000;
        break;
      }
    }
  }

  for (int i = 0; i < 10000; ++i) {
    const double phi = 40 * rng.Uniform();
    const double actual = 40 * rng.Uniform();
    const double r = GuiltReward(GuiltParams(0.1 + rng.Uniform()), phi, actual);
    if (r > 0.0 || (r == 0.0) != (phi <= actual)) {
      failures.push_back("guilt sign");
      break;
    }
  }

  ToMState c;
  for (int k = 1; k <= 30; ++k) {
    c = UpdateConfidence(c, Label::kCooperative, Label::kCooperative);
    const double expected = 1.0 - std::pow(0.9, k) * 0.5;
    if (std::abs(c.confidence - expected) > 1e-12) {
      failures.push_back("closed-form confidence");
      break;
    }
  }

  MatrixAgentState td;
  td.tom.zero_order = Belief(1.0);
  const double v =
      Td1Update(td, Label::kCooperative, 40, game).value(Label::kCooperative);
  if (std::abs(v - 7.6) > 1e-12) failures.push_back("td example");

  PolicyHyper hyper;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    PreferenceTable prefs;
    for (ObsKey k = 0; k < 3; ++k) {
      for (double& x : prefs[k]) x = 2 * rng.Uniform() - 1;
    }
    std::vector<PolicySample> batch;
    while (batch.size() < 12) {
      const ObsKey obs = rng.UniformInt(3);
      const int a = static_cast<int>(rng.UniformInt(kNumGridActions));
      const double ratio = 0.6 + 0.8 * rng.Uniform();
      if (std::abs(std::abs(ratio - 1) - hyper.clip) < 0.02) continue;
      batch.push_back({obs, a, 4 * rng.Uniform() - 2,
                       Softmax(prefs.at(obs))[a] / ratio});
    }
    const PreferenceTable grad = SurrogateGradient(prefs, batch, hyper);
    for (ObsKey k = 0; k < 3; ++k) {
      for (int b = 0; b < kNumGridActions; ++b) {
        PreferenceTable up = prefs, down = prefs;
        up[k][b] += 1e-6;
        down[k][b] -= 1e-6;
        const double fd = (SurrogateObjective(up, batch, hyper) -
                           SurrogateObjective(down, batch, hyper)) / 2e-6;
        const auto it = grad.find(k);
        const double g = it == grad.end() ? 0.0 : it->second[b];
        worst = std::max(worst, std::abs(g - fd) / std::max(1.0, std::abs(fd)));
      }
    }
  }
  if (worst > 1e-4) failures.push_back("surrogate gradient");

  const GridConfig env = MakeScenario(Scenario::kNearHares);
  const JointPolicy random = [](const GridState&, Rng& r) {
    return std::array{kGridActions[r.UniformInt(5)], kGridActions[r.UniformInt(5)]};
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng a(seed), b(seed);
    const EpisodeRecord x = RollOut(env, random, a);
    const EpisodeRecord y = RollOut(env, random, b);
    bool same = x.transitions.size() == y.transitions.size() &&
                x.labels == y.labels && x.event == y.event;
    for (std::size_t t = 0; same && t < x.transitions.size(); ++t) {
      same = x.transitions[t].next == y.transitions[t].next &&
             x.transitions[t].rewards == y.transitions[t].rewards;
    }
    if (!same) {
      failures.push_back("environment replay");
      break;
    }
  }

  std::ostringstream d;
  d << "belief ranges, guilt sign, closed-form confidence, TD example, "
       "gradient check (worst rel err "
    << worst << "), replay: ";
  if (failures.empty()) {
    d << "all hold";
  } else {
    for (const std::string& f : failures) d << f << " failed; ";
  }
  return {failures.empty(), d.str()};
}

}  // namespace
}  // namespace tomaga

int main() {
  using namespace tomaga;
  std::cout.precision(6);
  int failed = 0;
  failed += !RunCriterion(1, "threshold formula vs enumeration", 10, ThresholdAgreement);
  failed += !RunCriterion(2, "monotonicity in theta", 1, Monotonicity);
  failed += !RunCriterion(3, "transformed game spot check", 1, SpotCheck);
  failed += !RunCriterion(4, "matrix self-play sweep", 300, SelfPlay);
  failed += !RunCriterion(5, "tournament", 600, Tournament);
  failed += !RunCriterion(6, "grid-world ordering", 1800, Gridworld);
  failed += !RunCriterion(7, "unit-level invariants", 60, Invariants);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
