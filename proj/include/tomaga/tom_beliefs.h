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

#ifndef TOMAGA_TOM_BELIEFS_H_
#define TOMAGA_TOM_BELIEFS_H_

#include <array>

#include "tomaga/stag_hunt.h"

namespace tomaga {

// Distribution over a binary label, stored as the mass on kCooperative.
class Belief {
 public:
  Belief() = default;
  // Throws std::invalid_argument unless 0 <= p_cooperative <= 1.
  explicit Belief(double p_cooperative);

  static Belief PointMass(Label label) {
    return Belief(label == Label::kCooperative ? 1.0 : 0.0);
  }

  double p_cooperative() const { return p_cooperative_; }
  double Mass(Label label) const {
    return label == Label::kCooperative ? p_cooperative_
                                        : 1.0 - p_cooperative_;
  }

  bool operator==(const Belief&) const = default;

 private:
  double p_cooperative_ = 0.5;
};

// First-order theory-of-mind state of agent i about agent j.
//
//   zero_order   b0: i's belief about j's label.
//   first_order  b1: what i thinks j believes about i's label.
//   confidence   c_ij in [0, 1]: how much i trusts its first-order prediction.
//   learning_rate lambda in [0, 1]: step size of the confidence update.
//
// With tom_enabled == false the first-order belief is frozen at its initial
// value (guilt aversion without theory of mind).
struct ToMState {
  Belief zero_order{0.5};
  Belief first_order{0.5};
  double confidence = 0.5;
  double learning_rate = 0.1;
  bool tom_enabled = true;

  // Throws std::invalid_argument if confidence or learning_rate leave [0, 1].
  void Validate() const;

  bool operator==(const ToMState&) const = default;
};

// Value i expects j to get from each of j's labels when j best-responds
// to the first-order belief:  Phi(l_j) = sum_{l_i} b1(l_i) * r_j(l_i, l_j).
// Indexed by static_cast<int>(Label).
std::array<double, 2> OtherLabelValues(const ToMState& state,
                                       const PayoffMatrix& matrix);

// argmax of OtherLabelValues; ties go to kCooperative.
Label PredictOther(const ToMState& state, const PayoffMatrix& matrix);

ToMState UpdateConfidence(ToMState state, Label observed_other,
                          Label predicted_other);

// BI(l_j) = (1 - c) b0(l_j) + c [l_j == predicted]. Expects the confidence
// that was already updated this iteration.
Belief IntegrateBelief(const ToMState& state, Label predicted_other);

// Full per-iteration pipeline: predict from the current first-order belief,
// update confidence, replace the zero-order belief with the integrated one,
// and (when ToM is on) pull the first-order belief toward the label i
// actually showed, weighted by the new confidence.
ToMState UpdateBeliefs(ToMState state, Label observed_other, Label observed_self,
                       const PayoffMatrix& matrix);

}  // namespace tomaga

#endif  // TOMAGA_TOM_BELIEFS_H_
