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

#include "tomaga/tom_beliefs.h"

#include <algorithm>
#include <stdexcept>

namespace tomaga {
namespace {

bool InUnitInterval(double x) { return x >= 0.0 && x <= 1.0; }

// Convex combinations of values in [0, 1] can round a hair outside it.
double ClampUnit(double x) { return std::clamp(x, 0.0, 1.0); }

double Indicator(bool b) { return b ? 1.0 : 0.0; }

}  // namespace

Belief::Belief(double p_cooperative) : p_cooperative_(p_cooperative) {
  if (!InUnitInterval(p_cooperative)) {
    throw std::invalid_argument("belief mass must lie in [0, 1]");
  }
}

void ToMState::Validate() const {
  if (!InUnitInterval(confidence)) {
    throw std::invalid_argument("confidence must lie in [0, 1]");
  }
  if (!InUnitInterval(learning_rate)) {
    throw std::invalid_argument("belief learning rate must lie in [0, 1]");
  }
}

std::array<double, 2> OtherLabelValues(const ToMState& state,
                                       const PayoffMatrix& matrix) {
  std::array<double, 2> values{};
  for (Label other : kLabels) {
    double v = 0.0;
    for (Label self : kLabels) {
      // r_j(l_i, l_j) is j's payoff with j as the row player.
      v += state.first_order.Mass(self) * matrix.Payoff(other, self);
    }
    values[static_cast<int>(other)] = v;
  }
  return values;
}

Label PredictOther(const ToMState& state, const PayoffMatrix& matrix) {
  const std::array<double, 2> phi = OtherLabelValues(state, matrix);
  return phi[static_cast<int>(Label::kCooperative)] >=
                 phi[static_cast<int>(Label::kUncooperative)]
             ? Label::kCooperative
             : Label::kUncooperative;
}

ToMState UpdateConfidence(ToMState state, Label observed_other,
                          Label predicted_other) {
  const double lambda = state.learning_rate;
  state.confidence =
      ClampUnit((1.0 - lambda) * state.confidence +
                lambda * Indicator(observed_other == predicted_other));
  return state;
}

Belief IntegrateBelief(const ToMState& state, Label predicted_other) {
  const double c = state.confidence;
  return Belief(ClampUnit(
      (1.0 - c) * state.zero_order.p_cooperative() +
      c * Indicator(predicted_other == Label::kCooperative)));
}

ToMState UpdateBeliefs(ToMState state, Label observed_other, Label observed_self,
                       const PayoffMatrix& matrix) {
  const Label predicted = PredictOther(state, matrix);
  state = UpdateConfidence(state, observed_other, predicted);
  state.zero_order = IntegrateBelief(state, predicted);
  if (state.tom_enabled) {
    const double c = state.confidence;
    state.first_order = Belief(ClampUnit(
        (1.0 - c) * state.first_order.p_cooperative() +
        c * Indicator(observed_self == Label::kCooperative)));
  }
  return state;
}

}  // namespace tomaga
