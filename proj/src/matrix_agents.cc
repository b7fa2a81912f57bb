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

#include "tomaga/matrix_agents.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tomaga {
namespace {

constexpr std::array<std::pair<AgentKind, std::string_view>, 6> kKindNames = {{
    {AgentKind::kIndividual, "individual"},
    {AgentKind::kGuiltNoToM, "ga-no-tom"},
    {AgentKind::kToMAGA, "tomaga"},
    {AgentKind::kToMNoGuilt, "tom-no-guilt"},
    {AgentKind::kPavlov, "pavlov"},
    {AgentKind::kInequity, "inequity"},
}};

double Logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view AgentKindName(AgentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<AgentKind> ParseAgentKind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

void ExplorationConfig::Validate() const {
  if (!(temperature > 0.0) || !(min_temperature > 0.0)) {
    throw std::invalid_argument("softmax temperature must be > 0");
  }
  if (!(temperature_decay > 0.0 && temperature_decay <= 1.0)) {
    throw std::invalid_argument("temperature decay must lie in (0, 1]");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
}

void MatrixAgentState::Validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in [0, 1]");
  }
  tom.Validate();
  exploration.Validate();
}

double CooperationProbability(const MatrixAgentState& agent) {
  const double gap =
      agent.value(Label::kCooperative) - agent.value(Label::kUncooperative);
  const ExplorationConfig& ex = agent.exploration;
  if (ex.mode == ExplorationMode::kSoftmax) {
    return Logistic(gap / ex.temperature);
  }
  const double greedy = gap > 0.0 ? 1.0 : (gap < 0.0 ? 0.0 : 0.5);
  return (1.0 - ex.epsilon) * greedy + 0.5 * ex.epsilon;
}

Label SelectAction(const MatrixAgentState& agent, Rng& rng) {
  return rng.Bernoulli(CooperationProbability(agent)) ? Label::kCooperative
                                                      : Label::kUncooperative;
}

double BeliefLookahead(const ToMState& tom, const PayoffMatrix& matrix) {
  double best = -std::numeric_limits<double>::infinity();
  for (Label own : kLabels) {
    double v = 0.0;
    for (Label other : kLabels) {
      v += tom.zero_order.Mass(other) * matrix.Payoff(own, other);
    }
    best = std::max(best, v);
  }
  return best;
}

MatrixAgentState Td1Update(MatrixAgentState agent, Label taken,
                           double shaped_reward, const PayoffMatrix& matrix) {
  double& v = agent.values[static_cast<int>(taken)];
  const double delta =
      shaped_reward + agent.gamma * BeliefLookahead(agent.tom, matrix) - v;
  v += agent.alpha * delta;
  return agent;
}

std::array<double, 2> InitialValuesForProbability(double p, double temperature,
                                                  double clamp) {
  const double q = std::clamp(p, clamp, 1.0 - clamp);
  const double half = 0.5 * temperature * std::log(q / (1.0 - q));
  return {half, -half};
}

PavlovState::PavlovState(int i, int n) : i_(i), n_(n) {
  if (n <= 0 || i < 0 || i > n) {
    throw std::invalid_argument("pavlov state needs n > 0 and 0 <= i <= n");
  }
}

PavlovState PavlovState::FromProbability(int n, double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw std::invalid_argument("pavlov p0 must lie in [0, 1]");
  }
  return PavlovState(static_cast<int>(std::lround(p0 * n)), n);
}

Label PavlovAct(const PavlovState& state, Rng& rng) {
  return rng.Bernoulli(state.p_cooperative()) ? Label::kCooperative
                                              : Label::kUncooperative;
}

PavlovState PavlovUpdate(const PavlovState& state, Label own, Label other) {
  const int step = own == other ? 1 : -1;
  return PavlovState(std::clamp(state.i() + step, 0, state.n()), state.n());
}

MatrixAgent MakeMatrixAgent(const MatrixAgentConfig& config,
                            std::optional<double> initial_p_cooperative) {
  if (config.kind == AgentKind::kPavlov) {
    return PavlovState::FromProbability(config.pavlov_n, config.pavlov_p0);
  }
  MatrixAgentState agent;
  agent.tom = config.tom;
  agent.alpha = config.alpha;
  agent.gamma = config.gamma;
  agent.exploration = config.exploration;
  switch (config.kind) {
    case AgentKind::kIndividual:
    case AgentKind::kToMNoGuilt:
      agent.tom.tom_enabled = true;
      break;
    case AgentKind::kGuiltNoToM:
      agent.tom.tom_enabled = false;
      if (config.theta > 0.0) agent.guilt = GuiltParams(config.theta);
      break;
    case AgentKind::kToMAGA:
      agent.tom.tom_enabled = true;
      if (config.theta > 0.0) agent.guilt = GuiltParams(config.theta);
      break;
    default:
      throw std::invalid_argument("agent kind has no matrix-form learner");
  }
  if (initial_p_cooperative) {
    agent.values = InitialValuesForProbability(*initial_p_cooperative,
                                               agent.exploration.temperature);
  }
  agent.Validate();
  return agent;
}

double AgentCooperationProbability(const MatrixAgent& agent) {
  return std::visit(
      Overloaded{
          [](const MatrixAgentState& a) { return CooperationProbability(a); },
          [](const PavlovState& p) { return p.p_cooperative(); }},
      agent);
}

AgentStepLog LearnFromOutcome(MatrixAgent& agent, Label own, Label other,
                              const PayoffMatrix& matrix) {
  AgentStepLog log;
  log.action = own;
  log.material = matrix.Payoff(own, other);
  log.shaped = log.material;
  if (auto* pavlov = std::get_if<PavlovState>(&agent)) {
    *pavlov = PavlovUpdate(*pavlov, own, other);
    log.p_cooperative = pavlov->p_cooperative();
    return log;
  }
  auto& a = std::get<MatrixAgentState>(agent);
  a.tom = UpdateBeliefs(a.tom, other, own, matrix);
  log.phi = ExpectedOtherValue(a.tom, matrix);
  if (a.guilt) {
    log.psychological =
        GuiltReward(*a.guilt, log.phi, matrix.Payoff(other, own));
    log.shaped = ShapeReward(log.material, log.psychological);
  }
  a = Td1Update(std::move(a), own, log.shaped, matrix);
  ExplorationConfig& ex = a.exploration;
  ex.temperature =
      std::max(ex.min_temperature, ex.temperature * ex.temperature_decay);
  log.zero_order = a.tom.zero_order.p_cooperative();
  log.first_order = a.tom.first_order.p_cooperative();
  log.confidence = a.tom.confidence;
  log.value_c = a.value(Label::kCooperative);
  log.value_u = a.value(Label::kUncooperative);
  log.p_cooperative = CooperationProbability(a);
  return log;
}

MatrixIterationRecord PlayMatrixIteration(MatrixAgent& first,
                                          MatrixAgent& second,
                                          const PayoffMatrix& matrix,
                                          Rng& rng) {
  auto act = [&rng](const MatrixAgent& agent) {
    return std::visit(
        Overloaded{
            [&rng](const MatrixAgentState& a) { return SelectAction(a, rng); },
            [&rng](const PavlovState& p) { return PavlovAct(p, rng); }},
        agent);
  };
  const Label a1 = act(first);
  const Label a2 = act(second);
  MatrixIterationRecord record;
  record.outcome = {a1, a2};
  record.agents[0] = LearnFromOutcome(first, a1, a2, matrix);
  record.agents[1] = LearnFromOutcome(second, a2, a1, matrix);
  return record;
}

}  // namespace tomaga
