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

#ifndef TOMAGA_MATRIX_EXPERIMENTS_H_
#define TOMAGA_MATRIX_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tomaga/matrix_agents.h"
#include "tomaga/stag_hunt.h"

namespace tomaga {

// How the sweep seeds beliefs from a cell's initial probabilities.
//   kUniform   every belief starts at the ToMState defaults.
//   kFromCell  b0 = the other's initial P(C), b1 = own initial P(C).
enum class BeliefInit { kUniform, kFromCell };

std::string_view BeliefInitName(BeliefInit init);
std::optional<BeliefInit> ParseBeliefInit(std::string_view name);

struct SweepSpec {
  PayoffMatrix matrix = PayoffMatrix::Create(40, 30, 20, 0);
  std::vector<double> p_grid;  // defaults to 0.0, 0.1, ..., 1.0
  int iterations = 500;
  int repetitions = 20;
  int tail_window = 50;
  MatrixAgentConfig agent;  // kind is replaced by each variant
  std::vector<AgentKind> variants = {AgentKind::kToMAGA,
                                     AgentKind::kGuiltNoToM};
  BeliefInit belief_init = BeliefInit::kUniform;

  SweepSpec();
  void Validate() const;
};

struct SweepCell {
  AgentKind variant;
  int i1 = 0;  // grid indices
  int i2 = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double mean_final_p = 0.0;     // player 1 softmax P(C) at the end
  double var_final_p = 0.0;      // across repetitions
  double mean_tail_freq = 0.0;   // player 1 empirical C frequency in tail
};

struct SweepResult {
  std::vector<SweepCell> cells;  // variant-major, then i1, then i2
  std::uint64_t base_seed = 0;
  int repetitions = 0;
};

// Seeds: repetition r of cell (i1, i2) uses DeriveSeed(base, {i1, i2, r})
// for every variant, so variants see common random numbers.
SweepResult RunSweep(const SweepSpec& spec, std::uint64_t base_seed,
                     int jobs);

// Mean of mean_final_p over all cells of one variant.
double MeanFinalCooperation(const SweepResult& result, AgentKind variant);

struct CornerGaps {
  double low = 0.0;   // mean (a - b) over cells with p1, p2 <= low_cut
  double high = 0.0;  // mean (a - b) over cells with p1, p2 >= high_cut
};

CornerGaps CornerGap(const SweepResult& result, AgentKind a, AgentKind b,
                     double low_cut = 0.3, double high_cut = 0.7);

enum class Composition { kHomogeneousToMAGA, kHomogeneousPavlov, kHeterogeneous };

std::string_view CompositionName(Composition c);
std::optional<Composition> ParseComposition(std::string_view name);

struct TournamentSpec {
  PayoffMatrix matrix = PayoffMatrix::Create(5, 4, 2, 1);
  int group_size = 2;
  Composition composition = Composition::kHomogeneousToMAGA;
  int rounds = 5000;
  int window = 100;
  MatrixAgentConfig learner;  // used for ToMAGA members
  MatrixAgentConfig pavlov;   // kind forced to kPavlov

  TournamentSpec();
  void Validate() const;
};

struct TournamentRun {
  std::uint64_t seed = 0;
  double window_mean = 0.0;            // last `window` rounds
  std::vector<double> common_reward;   // per round
};

struct TournamentResult {
  TournamentSpec spec;
  std::vector<TournamentRun> runs;
  double mean = 0.0;
  double variance = 0.0;
};

// Each round shuffles the group, pairs neighbours and plays one matrix
// iteration per pair. With an odd group the last agent of the shuffle sits
// out. Common reward is the mean material reward over agents that played.
TournamentRun RunTournamentOnce(const TournamentSpec& spec, std::uint64_t seed,
                                bool keep_trace);

TournamentResult RunTournament(const TournamentSpec& spec,
                               const std::vector<std::uint64_t>& seeds,
                               int jobs, bool keep_trace = false);

}  // namespace tomaga

#endif  // TOMAGA_MATRIX_EXPERIMENTS_H_
