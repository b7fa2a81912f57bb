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

#include "tomaga/policy_learner.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tomaga {
namespace {

const ActionPrefs kZeroPrefs{};

const ActionPrefs& PrefsOrZero(const PreferenceTable& table, ObsKey obs) {
  auto it = table.find(obs);
  return it == table.end() ? kZeroPrefs : it->second;
}

double Entropy(const ActionPrefs& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double Clip(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

}  // namespace

void PolicyHyper::Validate() const {
  if (!(step_size > 0.0)) throw std::invalid_argument("step size must be > 0");
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("discount must lie in [0, 1]");
  }
  if (!(clip >= 0.0)) throw std::invalid_argument("clip ratio must be >= 0");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (!(entropy_weight >= 0.0)) {
    throw std::invalid_argument("entropy weight must be >= 0");
  }
  if (!(value_step > 0.0 && value_step <= 1.0)) {
    throw std::invalid_argument("value step must lie in (0, 1]");
  }
}

ObsKey EncodeObservation(const GridState& state, int self,
                         const GridConfig& config, int time_bucket_width) {
  if (time_bucket_width < 1) {
    throw std::invalid_argument("time bucket width must be >= 1");
  }
  const ObsKey n = static_cast<ObsKey>(config.NumCells());
  const ObsKey buckets =
      static_cast<ObsKey>((config.t_max + time_bucket_width - 1) /
                          time_bucket_width);
  const ObsKey bucket = std::min<ObsKey>(
      static_cast<ObsKey>(state.timestep / time_bucket_width), buckets - 1);
  const ObsKey own = config.CellIndex(state.agents[self]);
  const ObsKey other = config.CellIndex(state.agents[1 - self]);
  const ObsKey stag = config.CellIndex(state.stag);
  return ((own * n + other) * n + stag) * buckets + bucket;
}

ActionPrefs Softmax(const ActionPrefs& prefs) {
  const double top = *std::max_element(prefs.begin(), prefs.end());
  ActionPrefs out{};
  double z = 0.0;
  for (int a = 0; a < kNumGridActions; ++a) {
    out[a] = std::exp(prefs[a] - top);
    z += out[a];
  }
  for (double& p : out) p /= z;
  return out;
}

ActionPrefs PolicyParams::Probabilities(ObsKey obs) const {
  return Softmax(PrefsOrZero(preferences, obs));
}

double PolicyParams::Value(ObsKey obs) const {
  auto it = values.find(obs);
  return it == values.end() ? 0.0 : it->second;
}

std::vector<double> DiscountedReturns(std::span<const double> rewards,
                                      double gamma) {
  std::vector<double> returns(rewards.size());
  double g = 0.0;
  for (std::size_t t = rewards.size(); t-- > 0;) {
    g = rewards[t] + gamma * g;
    returns[t] = g;
  }
  return returns;
}

double SurrogateObjective(const PreferenceTable& prefs,
                          std::span<const PolicySample> batch,
                          const PolicyHyper& hyper) {
  if (batch.empty()) return 0.0;
  double total = 0.0;
  for (const PolicySample& s : batch) {
    const ActionPrefs pi = Softmax(PrefsOrZero(prefs, s.obs));
    const double rho = pi[s.action] / s.old_prob;
    const double clipped = Clip(rho, 1.0 - hyper.clip, 1.0 + hyper.clip);
    total += std::min(rho * s.advantage, clipped * s.advantage) +
             hyper.entropy_weight * Entropy(pi);
  }
  return total / static_cast<double>(batch.size());
}

PreferenceTable SurrogateGradient(const PreferenceTable& prefs,
                                  std::span<const PolicySample> batch,
                                  const PolicyHyper& hyper) {
  PreferenceTable grad;
  if (batch.empty()) return grad;
  const double scale = 1.0 / static_cast<double>(batch.size());
  for (const PolicySample& s : batch) {
    const ActionPrefs pi = Softmax(PrefsOrZero(prefs, s.obs));
    ActionPrefs& g = grad[s.obs];
    const double rho = pi[s.action] / s.old_prob;
    const bool clipped_out =
        (s.advantage > 0.0 && rho >= 1.0 + hyper.clip) ||
        (s.advantage < 0.0 && rho <= 1.0 - hyper.clip);
    if (!clipped_out && s.advantage != 0.0) {
      for (int b = 0; b < kNumGridActions; ++b) {
        const double indicator = b == s.action ? 1.0 : 0.0;
        g[b] += scale * s.advantage * rho * (indicator - pi[b]);
      }
    }
    if (hyper.entropy_weight > 0.0) {
      const double h = Entropy(pi);
      for (int b = 0; b < kNumGridActions; ++b) {
        if (pi[b] > 0.0) {
          g[b] -= scale * hyper.entropy_weight * pi[b] * (std::log(pi[b]) + h);
        }
      }
    }
  }
  return grad;
}

PolicyParams PolicyUpdate(PolicyParams params,
                          std::span<const LearnerStep> episode) {
  if (episode.empty()) throw std::invalid_argument("empty episode");
  const PolicyHyper& hyper = params.hyper;
  std::vector<double> rewards;
  rewards.reserve(episode.size());
  for (const LearnerStep& s : episode) rewards.push_back(s.reward);
  const std::vector<double> returns = DiscountedReturns(rewards, hyper.gamma);

  std::vector<PolicySample> batch;
  batch.reserve(episode.size());
  for (std::size_t t = 0; t < episode.size(); ++t) {
    const LearnerStep& s = episode[t];
    batch.push_back({s.obs, s.action, returns[t] - params.Value(s.obs),
                     params.Probabilities(s.obs)[s.action]});
  }
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    const PreferenceTable grad =
        SurrogateGradient(params.preferences, batch, hyper);
    for (const auto& [obs, g] : grad) {
      ActionPrefs& p = params.preferences[obs];
      for (int b = 0; b < kNumGridActions; ++b) p[b] += hyper.step_size * g[b];
    }
  }
  for (std::size_t t = 0; t < episode.size(); ++t) {
    double& v = params.values[episode[t].obs];
    v += hyper.value_step * (returns[t] - v);
  }
  return params;
}

GridLearner MakeGridLearner(const GridAgentConfig& config) {
  config.hyper.Validate();
  config.tom.Validate();
  GridLearner learner;
  learner.kind = config.kind;
  learner.policy.hyper = config.hyper;
  learner.tom = config.tom;
  learner.time_bucket_width = config.time_bucket_width;
  learner.guilt_on_unknown = config.guilt_on_unknown;
  switch (config.kind) {
    case AgentKind::kIndividual:
    case AgentKind::kToMNoGuilt:
      learner.tom.tom_enabled = true;
      break;
    case AgentKind::kGuiltNoToM:
      learner.tom.tom_enabled = false;
      if (config.theta > 0.0) learner.guilt = GuiltParams(config.theta);
      break;
    case AgentKind::kToMAGA:
      learner.tom.tom_enabled = true;
      if (config.theta > 0.0) learner.guilt = GuiltParams(config.theta);
      break;
    case AgentKind::kInequity:
      config.inequity.Validate();
      learner.inequity = config.inequity;
      break;
    case AgentKind::kPavlov:
      throw std::invalid_argument("pavlov has no grid-world learner");
  }
  return learner;
}

IterationLog RunIteration(std::array<GridLearner, 2>& learners,
                          const GridConfig& config, Rng& rng,
                          EpisodeRecord* record) {
  std::array<std::vector<LearnerStep>, 2> steps;
  auto policy = [&](const GridState& state, Rng& r) {
    std::array<GridAction, 2> actions{};
    for (int k = 0; k < 2; ++k) {
      const ObsKey obs = EncodeObservation(state, k, config,
                                           learners[k].time_bucket_width);
      const ActionPrefs pi = learners[k].policy.Probabilities(obs);
      const int a = r.Categorical(pi);
      actions[k] = kGridActions[a];
      steps[k].push_back({obs, a, 0.0});
    }
    return actions;
  };
  EpisodeRecord episode = RollOut(config, policy, rng);

  IterationLog log;
  log.event = episode.event;
  log.length = static_cast<int>(episode.transitions.size());
  const PayoffMatrix matrix = config.AsPayoffMatrix();
  const std::optional<Label> l0 = ToLabel(episode.labels[0]);
  const std::optional<Label> l1 = ToLabel(episode.labels[1]);
  const bool known = l0.has_value() && l1.has_value();
  const std::array<std::optional<Label>, 2> labels{l0, l1};

  for (int k = 0; k < 2; ++k) {
    GridLearner& me = learners[k];
    AgentIterationLog& out = log.agents[k];
    const double own = episode.terminal_rewards[k];
    const double other = episode.terminal_rewards[1 - k];
    out.label = episode.labels[k];
    out.material = own;
    if (known) me.tom = UpdateBeliefs(me.tom, *labels[1 - k], *labels[k], matrix);
    out.phi = ExpectedOtherValue(me.tom, matrix);
    if (me.guilt && (known || me.guilt_on_unknown)) {
      out.psychological = GuiltReward(*me.guilt, out.phi, other);
    } else if (me.inequity) {
      const std::array<double, 1> others{other};
      out.psychological = InequityReward(*me.inequity, own, others);
    }
    out.shaped = ShapeReward(own, out.psychological);
    out.zero_order = me.tom.zero_order.p_cooperative();
    out.first_order = me.tom.first_order.p_cooperative();
    out.confidence = me.tom.confidence;
    steps[k].back().reward = out.shaped;
    me.policy = PolicyUpdate(std::move(me.policy), steps[k]);
  }
  if (record != nullptr) *record = std::move(episode);
  return log;
}

std::vector<std::array<LabelProportions, 2>> ClassifyRun(
    std::span<const std::array<PolicyLabel, 2>> history, int window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (static_cast<std::size_t>(window) > history.size()) {
    throw std::invalid_argument("window exceeds history length");
  }
  std::vector<std::array<LabelProportions, 2>> out(history.size());
  std::array<std::array<int, 3>, 2> counts{};
  for (std::size_t t = 0; t < history.size(); ++t) {
    for (int k = 0; k < 2; ++k) ++counts[k][static_cast<int>(history[t][k])];
    if (t >= static_cast<std::size_t>(window)) {
      for (int k = 0; k < 2; ++k) {
        --counts[k][static_cast<int>(history[t - window][k])];
      }
    }
    const double n = static_cast<double>(
        std::min<std::size_t>(t + 1, static_cast<std::size_t>(window)));
    for (int k = 0; k < 2; ++k) {
      out[t][k] = {counts[k][0] / n, counts[k][1] / n, counts[k][2] / n};
    }
  }
  return out;
}

std::optional<int> IterationsToThreshold(
    std::span<const std::array<PolicyLabel, 2>> history, int window,
    double threshold) {
  if (history.size() < static_cast<std::size_t>(window)) return std::nullopt;
  const auto props = ClassifyRun(history, window);
  for (std::size_t t = window - 1; t < props.size(); ++t) {
    const double c = 0.5 * (props[t][0].cooperative + props[t][1].cooperative);
    if (c >= threshold - 1e-12) return static_cast<int>(t);
  }
  return std::nullopt;
}

}  // namespace tomaga
