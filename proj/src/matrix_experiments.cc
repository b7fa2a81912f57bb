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

#include "tomaga/matrix_experiments.h"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>

#include "tomaga/parallel.h"
#include "tomaga/rng.h"

namespace tomaga {
namespace {

struct Sample {
  double final_p = 0.0;
  double tail_freq = 0.0;
};

MatrixAgent MakeSweepAgent(const SweepSpec& spec, AgentKind kind, double own_p,
                           double other_p) {
  MatrixAgentConfig config = spec.agent;
  config.kind = kind;
  if (spec.belief_init == BeliefInit::kFromCell) {
    config.tom.zero_order = Belief(other_p);
    config.tom.first_order = Belief(own_p);
  }
  return MakeMatrixAgent(config, own_p);
}

Sample RunSelfPlay(const SweepSpec& spec, AgentKind kind, double p1, double p2,
                   std::uint64_t seed) {
  MatrixAgent first = MakeSweepAgent(spec, kind, p1, p2);
  MatrixAgent second = MakeSweepAgent(spec, kind, p2, p1);
  Rng rng(seed);
  int tail_c = 0;
  const int tail_start = spec.iterations - spec.tail_window;
  for (int t = 0; t < spec.iterations; ++t) {
    const MatrixIterationRecord rec =
        PlayMatrixIteration(first, second, spec.matrix, rng);
    if (t >= tail_start && rec.outcome.self == Label::kCooperative) ++tail_c;
  }
  return {AgentCooperationProbability(first),
          static_cast<double>(tail_c) / spec.tail_window};
}

double Mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double Variance(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mu = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - mu) * (x - mu);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace

std::string_view BeliefInitName(BeliefInit init) {
  return init == BeliefInit::kUniform ? "uniform" : "from-cell";
}

std::optional<BeliefInit> ParseBeliefInit(std::string_view name) {
  if (name == "uniform") return BeliefInit::kUniform;
  if (name == "from-cell") return BeliefInit::kFromCell;
  return std::nullopt;
}

SweepSpec::SweepSpec() {
  for (int k = 0; k <= 10; ++k) p_grid.push_back(k / 10.0);
}

void SweepSpec::Validate() const {
  if (p_grid.empty()) throw std::invalid_argument("sweep grid is empty");
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("sweep probabilities must lie in [0, 1]");
    }
  }
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (tail_window < 1 || tail_window > iterations) {
    throw std::invalid_argument("tail window must lie in [1, iterations]");
  }
  if (variants.empty()) throw std::invalid_argument("no sweep variants");
  for (AgentKind k : variants) {
    if (k == AgentKind::kPavlov || k == AgentKind::kInequity) {
      throw std::invalid_argument("sweep variants must be TD(1) learners");
    }
  }
}

SweepResult RunSweep(const SweepSpec& spec, std::uint64_t base_seed,
                     int jobs) {
  spec.Validate();
  const std::size_t g = spec.p_grid.size();
  const std::size_t reps = spec.repetitions;
  const std::size_t nv = spec.variants.size();
  const std::size_t total = nv * g * g * reps;
  std::vector<Sample> samples(total);
  ParallelFor(total, jobs, [&](std::size_t idx) {
    const std::size_t r = idx % reps;
    const std::size_t i2 = (idx / reps) % g;
    const std::size_t i1 = (idx / reps / g) % g;
    const std::size_t v = idx / reps / g / g;
    const std::uint64_t seed = DeriveSeed(base_seed, {i1, i2, r});
    samples[idx] = RunSelfPlay(spec, spec.variants[v], spec.p_grid[i1],
                               spec.p_grid[i2], seed);
  });

  SweepResult result;
  result.base_seed = base_seed;
  result.repetitions = spec.repetitions;
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t i1 = 0; i1 < g; ++i1) {
      for (std::size_t i2 = 0; i2 < g; ++i2) {
        std::vector<double> finals, tails;
        for (std::size_t r = 0; r < reps; ++r) {
          const Sample& s = samples[((v * g + i1) * g + i2) * reps + r];
          finals.push_back(s.final_p);
          tails.push_back(s.tail_freq);
        }
        result.cells.push_back({spec.variants[v], static_cast<int>(i1),
                                static_cast<int>(i2), spec.p_grid[i1],
                                spec.p_grid[i2], Mean(finals),
                                Variance(finals), Mean(tails)});
      }
    }
  }
  return result;
}

double MeanFinalCooperation(const SweepResult& result, AgentKind variant) {
  std::vector<double> v;
  for (const SweepCell& c : result.cells) {
    if (c.variant == variant) v.push_back(c.mean_final_p);
  }
  if (v.empty()) throw std::invalid_argument("variant absent from sweep");
  return Mean(v);
}

CornerGaps CornerGap(const SweepResult& result, AgentKind a, AgentKind b,
                     double low_cut, double high_cut) {
  constexpr double kEps = 1e-9;
  std::vector<double> low, high;
  for (const SweepCell& ca : result.cells) {
    if (ca.variant != a) continue;
    auto it = std::find_if(result.cells.begin(), result.cells.end(),
                           [&](const SweepCell& cb) {
                             return cb.variant == b && cb.i1 == ca.i1 &&
                                    cb.i2 == ca.i2;
                           });
    if (it == result.cells.end()) continue;
    const double gap = ca.mean_final_p - it->mean_final_p;
    if (ca.p1 <= low_cut + kEps && ca.p2 <= low_cut + kEps) low.push_back(gap);
    if (ca.p1 >= high_cut - kEps && ca.p2 >= high_cut - kEps) {
      high.push_back(gap);
    }
  }
  if (low.empty() || high.empty()) {
    throw std::invalid_argument("sweep grid lacks corner cells");
  }
  return {Mean(low), Mean(high)};
}

std::string_view CompositionName(Composition c) {
  switch (c) {
    case Composition::kHomogeneousToMAGA:
      return "homogeneous-tomaga";
    case Composition::kHomogeneousPavlov:
      return "homogeneous-pavlov";
    case Composition::kHeterogeneous:
      return "heterogeneous";
  }
  return "unknown";
}

std::optional<Composition> ParseComposition(std::string_view name) {
  for (Composition c :
       {Composition::kHomogeneousToMAGA, Composition::kHomogeneousPavlov,
        Composition::kHeterogeneous}) {
    if (CompositionName(c) == name) return c;
  }
  return std::nullopt;
}

TournamentSpec::TournamentSpec() {
  learner.kind = AgentKind::kToMAGA;
  pavlov.kind = AgentKind::kPavlov;
}

void TournamentSpec::Validate() const {
  if (group_size < 2) throw std::invalid_argument("group size must be >= 2");
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  if (window < 1 || window > rounds) {
    throw std::invalid_argument("report window must lie in [1, rounds]");
  }
}

TournamentRun RunTournamentOnce(const TournamentSpec& spec, std::uint64_t seed,
                                bool keep_trace) {
  spec.Validate();
  MatrixAgentConfig pavlov = spec.pavlov;
  pavlov.kind = AgentKind::kPavlov;
  std::vector<MatrixAgent> group;
  for (int k = 0; k < spec.group_size; ++k) {
    const bool learner =
        spec.composition == Composition::kHomogeneousToMAGA ||
        (spec.composition == Composition::kHeterogeneous && k == 0);
    group.push_back(MakeMatrixAgent(learner ? spec.learner : pavlov));
  }
  Rng rng(seed);
  std::vector<int> order(group.size());
  std::iota(order.begin(), order.end(), 0);
  TournamentRun run;
  run.seed = seed;
  double window_sum = 0.0;
  const int players = spec.group_size - spec.group_size % 2;
  for (int t = 0; t < spec.rounds; ++t) {
    rng.Shuffle(std::span<int>(order));
    double total = 0.0;
    for (int k = 0; k < players; k += 2) {
      const MatrixIterationRecord rec = PlayMatrixIteration(
          group[order[k]], group[order[k + 1]], spec.matrix, rng);
      total += rec.agents[0].material + rec.agents[1].material;
    }
    const double common = total / players;
    if (keep_trace) run.common_reward.push_back(common);
    if (t >= spec.rounds - spec.window) window_sum += common;
  }
  run.window_mean = window_sum / spec.window;
  return run;
}

TournamentResult RunTournament(const TournamentSpec& spec,
                               const std::vector<std::uint64_t>& seeds,
                               int jobs, bool keep_trace) {
  if (seeds.empty()) throw std::invalid_argument("tournament needs seeds");
  TournamentResult result;
  result.spec = spec;
  result.runs.resize(seeds.size());
  ParallelFor(seeds.size(), jobs, [&](std::size_t i) {
    result.runs[i] = RunTournamentOnce(spec, seeds[i], keep_trace);
  });
  std::vector<double> means;
  for (const TournamentRun& r : result.runs) means.push_back(r.window_mean);
  result.mean = Mean(means);
  result.variance = Variance(means);
  return result;
}

}  // namespace tomaga
