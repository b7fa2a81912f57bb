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

#ifndef TOMAGA_MATRIX_AGENTS_H_
#define TOMAGA_MATRIX_AGENTS_H_

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include "tomaga/guilt.h"
#include "tomaga/rng.h"
#include "tomaga/stag_hunt.h"
#include "tomaga/tom_beliefs.h"

namespace tomaga {

enum class AgentKind {
  kIndividual,   // TD(1) learner on material reward, beliefs tracked
  kGuiltNoToM,   // guilt shaping with a frozen first-order belief
  kToMAGA,       // guilt shaping with first-order belief updates
  kToMNoGuilt,   // belief machinery, no shaping
  kPavlov,       // generalized win-stay-lose-shift
  kInequity,     // Fehr-Schmidt shaping (grid world only)
};

std::string_view AgentKindName(AgentKind kind);
// Accepts the names produced by AgentKindName. Empty on unknown input.
std::optional<AgentKind> ParseAgentKind(std::string_view name);

enum class ExplorationMode { kSoftmax, kEpsilonGreedy };

struct ExplorationConfig {
  ExplorationMode mode = ExplorationMode::kSoftmax;
  // Current softmax temperature; multiplied by temperature_decay after each
  // update and floored at min_temperature.
  double temperature = 1.0;
  double temperature_decay = 0.995;
  double min_temperature = 1e-3;
  double epsilon = 0.1;

  void Validate() const;
};

struct MatrixAgentState {
  std::array<double, 2> values{0.0, 0.0};  // V indexed by Label
  ToMState tom;
  std::optional<GuiltParams> guilt;  // empty means theta = 0
  double alpha = 0.1;
  double gamma = 0.9;
  ExplorationConfig exploration;

  double value(Label a) const { return values[static_cast<int>(a)]; }
  void Validate() const;
};

// Probability that SelectAction returns kCooperative. Softmax is evaluated
// as a logistic of the value gap so large gaps saturate cleanly; greedy
// ties split evenly.
double CooperationProbability(const MatrixAgentState& agent);

Label SelectAction(const MatrixAgentState& agent, Rng& rng);

// max_a sum_{a_j} b0(a_j) r_i(a, a_j) on material rewards.
double BeliefLookahead(const ToMState& tom, const PayoffMatrix& matrix);

MatrixAgentState Td1Update(MatrixAgentState agent, Label taken,
                           double shaped_reward, const PayoffMatrix& matrix);

// Values (V(C), V(U)) = (+x, -x) with x = temperature * logit(p) / 2 so the
// softmax starts at P(C) = p. p is clamped to [clamp, 1 - clamp].
std::array<double, 2> InitialValuesForProbability(double p, double temperature,
                                                  double clamp = 1e-3);

class PavlovState {
 public:
  // Throws std::invalid_argument unless n > 0 and 0 <= i <= n.
  PavlovState(int i, int n);
  // i = round(n * p0).
  static PavlovState FromProbability(int n, double p0);

  int i() const { return i_; }
  int n() const { return n_; }
  double p_cooperative() const {
    return static_cast<double>(i_) / static_cast<double>(n_);
  }

  bool operator==(const PavlovState&) const = default;

 private:
  int i_;
  int n_;
};

Label PavlovAct(const PavlovState& state, Rng& rng);

// Unit step toward cooperation on matched labels, away on mismatch.
PavlovState PavlovUpdate(const PavlovState& state, Label own, Label other);

using MatrixAgent = std::variant<MatrixAgentState, PavlovState>;

struct MatrixAgentConfig {
  AgentKind kind = AgentKind::kToMAGA;
  double theta = 200.0;
  double alpha = 0.1;
  double gamma = 0.9;
  ExplorationConfig exploration;
  ToMState tom;  // tom_enabled is overwritten from kind
  int pavlov_n = 10;
  double pavlov_p0 = 0.5;
};

// Builds an agent of config.kind. For learning agents the initial values
// come from `initial_p_cooperative` when given, else start at zero.
MatrixAgent MakeMatrixAgent(const MatrixAgentConfig& config,
                            std::optional<double> initial_p_cooperative = {});

double AgentCooperationProbability(const MatrixAgent& agent);

struct AgentStepLog {
  Label action = Label::kCooperative;
  double material = 0.0;
  double phi = 0.0;
  double psychological = 0.0;
  double shaped = 0.0;
  double zero_order = 0.0;
  double first_order = 0.0;
  double confidence = 0.0;
  double value_c = 0.0;
  double value_u = 0.0;
  double p_cooperative = 0.0;  // after learning
};

// Learning half of one iteration for a single agent that played `own`
// against `other`. Guilt agents update beliefs, then shape, then run TD(1).
AgentStepLog LearnFromOutcome(MatrixAgent& agent, Label own, Label other,
                              const PayoffMatrix& matrix);

struct MatrixIterationRecord {
  JointOutcome outcome;  // self = first agent
  std::array<AgentStepLog, 2> agents;
};

// Both agents pick actions (first agent draws first), then each learns.
MatrixIterationRecord PlayMatrixIteration(MatrixAgent& first,
                                          MatrixAgent& second,
                                          const PayoffMatrix& matrix, Rng& rng);

}  // namespace tomaga

#endif  // TOMAGA_MATRIX_AGENTS_H_
