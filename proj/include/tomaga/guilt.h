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

#ifndef TOMAGA_GUILT_H_
#define TOMAGA_GUILT_H_

#include <span>

#include "tomaga/stag_hunt.h"
#include "tomaga/tom_beliefs.h"

namespace tomaga {

// Guilt sensitivity theta_ij. Strictly positive; an agent without guilt
// holds no GuiltParams at all.
class GuiltParams {
 public:
  explicit GuiltParams(double theta);
  double theta() const { return theta_; }

 private:
  double theta_;
};

// Fehr-Schmidt sensitivities for the inequity-averse baseline.
struct InequityParams {
  double theta_advantageous = 0.0;
  double theta_disadvantageous = 0.0;
  int n_agents = 2;

  void Validate() const;
};

// phi_j: material value agent i believes j expects, from both beliefs:
//   sum_{l_i, l_j} b0(l_j) b1(l_i) r_j(l_i, l_j).
// Always within [g, h].
double ExpectedOtherValue(const ToMState& state, const PayoffMatrix& matrix);

// -theta * max(0, phi_j - r_j). Never positive.
double GuiltReward(const GuiltParams& params, double phi_j,
                   double actual_other_reward);

inline double ShapeReward(double material, double psychological) {
  return material + psychological;
}

// -theta_ad/(N-1) * sum max(r_i - r_j, 0) - theta_dis/(N-1) * sum max(r_j - r_i, 0)
// `other_rewards` must hold exactly N - 1 entries.
double InequityReward(const InequityParams& params, double own_reward,
                      std::span<const double> other_rewards);

}  // namespace tomaga

#endif  // TOMAGA_GUILT_H_
