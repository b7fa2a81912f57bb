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

#ifndef TOMAGA_POLICY_LEARNER_H_
#define TOMAGA_POLICY_LEARNER_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tomaga/gridworld.h"
#include "tomaga/guilt.h"
#include "tomaga/matrix_agents.h"
#include "tomaga/rng.h"
#include "tomaga/tom_beliefs.h"

namespace tomaga {

struct PolicyHyper {
  double step_size = 0.05;
  double gamma = 0.99;
  double clip = 0.2;
  int epochs = 4;
  double entropy_weight = 0.01;
  double value_step = 0.1;

  void Validate() const;
};

using ObsKey = std::uint64_t;
using ActionPrefs = std::array<double, kNumGridActions>;
using PreferenceTable = std::unordered_map<ObsKey, ActionPrefs>;

// Key over (own cell, other cell, stag cell, timestep bucket). Buckets are
// `time_bucket_width` steps wide; width >= t_max drops time from the key.
ObsKey EncodeObservation(const GridState& state, int self,
                         const GridConfig& config, int time_bucket_width);

ActionPrefs Softmax(const ActionPrefs& prefs);

struct PolicyParams {
  PreferenceTable preferences;  // missing keys mean all-zero logits
  std::unordered_map<ObsKey, double> values;
  PolicyHyper hyper;

  ActionPrefs Probabilities(ObsKey obs) const;
  double Value(ObsKey obs) const;
};

// Discounted returns G_t = r_t + gamma * G_{t+1}.
std::vector<double> DiscountedReturns(std::span<const double> rewards,
                                      double gamma);

struct PolicySample {
  ObsKey obs = 0;
  int action = 0;
  double advantage = 0.0;
  double old_prob = 1.0;  // pi_old(action | obs)
};

// Mean over samples of
//   min(rho * A, clip(rho, 1 - eps, 1 + eps) * A) + beta * H(pi(. | obs)).
double SurrogateObjective(const PreferenceTable& prefs,
                          std::span<const PolicySample> batch,
                          const PolicyHyper& hyper);

// Analytic gradient of SurrogateObjective. The clipped term contributes
// nothing when A > 0 and rho >= 1 + eps, or A < 0 and rho <= 1 - eps.
PreferenceTable SurrogateGradient(const PreferenceTable& prefs,
                                  std::span<const PolicySample> batch,
                                  const PolicyHyper& hyper);

struct LearnerStep {
  ObsKey obs;
  int action;
  double reward;  // shaped; only the last step is nonzero
};

// Returns, advantages (G - V) and the behaviour probabilities are frozen
// from the incoming params; then `epochs` full-batch ascent steps on the
// surrogate, then one value step per sample toward its return.
PolicyParams PolicyUpdate(PolicyParams params,
                          std::span<const LearnerStep> episode);

struct GridAgentConfig {
  AgentKind kind = AgentKind::kToMAGA;
  double theta = 1.0;
  InequityParams inequity{1.0, 1.0, 2};
  ToMState tom;
  PolicyHyper hyper;
  int time_bucket_width = 20;
  // Guilt on episodes with an Unknown label uses the other's realized
  // reward; when false those episodes carry no psychological reward.
  bool guilt_on_unknown = true;
};

struct GridLearner {
  AgentKind kind = AgentKind::kIndividual;
  PolicyParams policy;
  ToMState tom;
  std::optional<GuiltParams> guilt;
  std::optional<InequityParams> inequity;
  int time_bucket_width = 20;
  bool guilt_on_unknown = true;
};

GridLearner MakeGridLearner(const GridAgentConfig& config);

struct AgentIterationLog {
  PolicyLabel label = PolicyLabel::kUnknown;
  double material = 0.0;
  double phi = 0.0;
  double psychological = 0.0;
  double shaped = 0.0;
  double zero_order = 0.0;
  double first_order = 0.0;
  double confidence = 0.0;
};

struct IterationLog {
  TerminationEvent event = TerminationEvent::kNone;
  int length = 0;
  std::array<AgentIterationLog, 2> agents;
};

// One learning iteration for a learner pair: act, label, update
// beliefs when both labels are known, shape the terminal reward, update
// each policy.
IterationLog RunIteration(std::array<GridLearner, 2>& learners,
                          const GridConfig& config, Rng& rng,
                          EpisodeRecord* record = nullptr);

struct LabelProportions {
  double cooperative = 0.0;
  double uncooperative = 0.0;
  double unknown = 0.0;
};

// Entry t holds each agent's label shares over history[t - window + 1 .. t]
// (fewer entries while t + 1 < window).
std::vector<std::array<LabelProportions, 2>> ClassifyRun(
    std::span<const std::array<PolicyLabel, 2>> history, int window);

// First iteration index t with a full window whose C share, averaged over
// both agents, reaches `threshold`.
std::optional<int> IterationsToThreshold(
    std::span<const std::array<PolicyLabel, 2>> history, int window,
    double threshold);

}  // namespace tomaga

#endif  // TOMAGA_POLICY_LEARNER_H_
