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

#include "tomaga/guilt.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tomaga {

GuiltParams::GuiltParams(double theta) : theta_(theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("guilt sensitivity must be a finite theta > 0");
  }
}

void InequityParams::Validate() const {
  if (!(theta_advantageous >= 0.0) || !(theta_disadvantageous >= 0.0)) {
    throw std::invalid_argument("inequity sensitivities must be >= 0");
  }
  if (n_agents < 2) {
    throw std::invalid_argument("inequity aversion needs at least 2 agents");
  }
}

double ExpectedOtherValue(const ToMState& state, const PayoffMatrix& matrix) {
  double phi = 0.0;
  for (Label self : kLabels) {
    for (Label other : kLabels) {
      phi += state.zero_order.Mass(other) * state.first_order.Mass(self) *
             matrix.Payoff(other, self);
    }
  }
  return phi;
}

double GuiltReward(const GuiltParams& params, double phi_j,
                   double actual_other_reward) {
  return -params.theta() * std::max(0.0, phi_j - actual_other_reward);
}

double InequityReward(const InequityParams& params, double own_reward,
                      std::span<const double> other_rewards) {
  params.Validate();
  if (other_rewards.empty()) {
    throw std::invalid_argument("inequity reward needs at least one other");
  }
  if (static_cast<int>(other_rewards.size()) != params.n_agents - 1) {
    throw std::invalid_argument("inequity reward expects N - 1 other rewards");
  }
  double advantage = 0.0;
  double disadvantage = 0.0;
  for (double other : other_rewards) {
    advantage += std::max(own_reward - other, 0.0);
    disadvantage += std::max(other - own_reward, 0.0);
  }
  const double scale = 1.0 / static_cast<double>(params.n_agents - 1);
  return -params.theta_advantageous * scale * advantage -
         params.theta_disadvantageous * scale * disadvantage;
}

}  // namespace tomaga
