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

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "tomaga/rng.h"
#include "tomaga/stag_hunt.h"
#include "tomaga/tom_beliefs.h"

namespace tomaga {
namespace {

constexpr Label kC = Label::kCooperative;
constexpr Label kU = Label::kUncooperative;

const PayoffMatrix kGame = PayoffMatrix::Create(40, 30, 20, 0);

TEST(BeliefTest, RejectsOutOfRange) {
  EXPECT_THROW(Belief(-0.01), std::invalid_argument);
  EXPECT_THROW(Belief(1.01), std::invalid_argument);
  EXPECT_DOUBLE_EQ(Belief(0.3).Mass(kU), 0.7);
}

TEST(ToMStateTest, ValidateChecksRanges) {
  ToMState s;
  s.confidence = 1.5;
  EXPECT_THROW(s.Validate(), std::invalid_argument);
  s.confidence = 0.5;
  s.learning_rate = -0.1;
  EXPECT_THROW(s.Validate(), std::invalid_argument);
}

TEST(OtherLabelValuesTest, UniformFirstOrderBelief) {
  const ToMState s;
  const auto v = OtherLabelValues(s, kGame);
  EXPECT_DOUBLE_EQ(v[0], 20.0);  // 0.5 * 40 + 0.5 * 0
  EXPECT_DOUBLE_EQ(v[1], 25.0);  // 0.5 * 30 + 0.5 * 20
  EXPECT_EQ(PredictOther(s, kGame), kU);
}

TEST(PredictOtherTest, TieGoesToCooperative) {
  // Phi(C) = Phi(U) = 2.5 exactly at b1 = 1/2.
  const PayoffMatrix tie = PayoffMatrix::Create(4, 3, 2, 1);
  ToMState t;
  t.first_order = Belief(0.5);
  const auto w = OtherLabelValues(t, tie);
  EXPECT_EQ(w[0], w[1]);
  EXPECT_EQ(PredictOther(t, tie), kC);
}

TEST(ConfidenceTest, CorrectAndWrongPredictions) {
  const ToMState s;
  EXPECT_DOUBLE_EQ(UpdateConfidence(s, kU, kU).confidence, 0.55);
  EXPECT_DOUBLE_EQ(UpdateConfidence(s, kC, kU).confidence, 0.45);
}

TEST(ConfidenceTest, ClosedFormAfterKCorrectPredictions) {
  ToMState s;
  const double c0 = s.confidence;
  const double lambda = s.learning_rate;
  for (int k = 1; k <= 50; ++k) {
    s = UpdateConfidence(s, kC, kC);
    const double expected = 1.0 - std::pow(1.0 - lambda, k) * (1.0 - c0);
    ASSERT_NEAR(s.confidence, expected, 1e-12) << "k=" << k;
    if (k == 10) EXPECT_NEAR(s.confidence, 0.82566077995, 1e-11);
  }
}

TEST(IntegrateBeliefTest, MixesTowardPrediction) {
  ToMState s;
  s.confidence = 0.3;
  EXPECT_DOUBLE_EQ(IntegrateBelief(s, kC).p_cooperative(), 0.65);
  EXPECT_DOUBLE_EQ(IntegrateBelief(s, kU).p_cooperative(), 0.35);
}

TEST(UpdateBeliefsTest, CorrectPredictionOfUncooperation) {
  const ToMState s = UpdateBeliefs(ToMState{}, kU, kU, kGame);
  EXPECT_DOUBLE_EQ(s.confidence, 0.55);
  EXPECT_DOUBLE_EQ(s.zero_order.p_cooperative(), 0.225);
  EXPECT_DOUBLE_EQ(s.first_order.p_cooperative(), 0.225);
}

TEST(UpdateBeliefsTest, FrozenFirstOrderWithoutToM) {
  ToMState s;
  s.tom_enabled = false;
  s = UpdateBeliefs(s, kU, kU, kGame);
  EXPECT_DOUBLE_EQ(s.zero_order.p_cooperative(), 0.225);
  EXPECT_DOUBLE_EQ(s.first_order.p_cooperative(), 0.5);
}

// Values from an independent re-implementation of the update pipeline.
TEST(UpdateBeliefsTest, MatchesOracleSequence) {
  struct Row {
    Label other, self;
    double b0, b1, c;
  };
  const Row rows[] = {
      {kC, kC, 0.275, 0.7250000000000001, 0.45},
      {kC, kC, 0.641125, 0.8638750000000001, 0.505},
      {kU, kC, 0.8042336875, 0.9257438125, 0.4545},
      {kC, kU, 0.903888528878125, 0.454493924746875, 0.50905},
  };
  ToMState s;
  for (const Row& r : rows) {
    s = UpdateBeliefs(s, r.other, r.self, kGame);
    EXPECT_NEAR(s.zero_order.p_cooperative(), r.b0, 1e-12);
    EXPECT_NEAR(s.first_order.p_cooperative(), r.b1, 1e-12);
    EXPECT_NEAR(s.confidence, r.c, 1e-12);
  }
}

TEST(UpdateBeliefsTest, RangesPreservedUnderRandomUpdates) {
  Rng rng(2024);
  ToMState s;
  for (int i = 0; i < 100000; ++i) {
    if (i % 1000 == 0) {
      s.zero_order = Belief(rng.Uniform());
      s.first_order = Belief(rng.Uniform());
      s.confidence = rng.Uniform();
      s.learning_rate = rng.Uniform();
      s.tom_enabled = rng.Bernoulli(0.5);
    }
    const Label other = rng.Bernoulli(0.5) ? kC : kU;
    const Label self = rng.Bernoulli(0.5) ? kC : kU;
    s = UpdateBeliefs(s, other, self, kGame);
    ASSERT_GE(s.confidence, 0.0);
    ASSERT_LE(s.confidence, 1.0);
    ASSERT_GE(s.zero_order.p_cooperative(), 0.0);
    ASSERT_LE(s.zero_order.p_cooperative(), 1.0);
    ASSERT_GE(s.first_order.p_cooperative(), 0.0);
    ASSERT_LE(s.first_order.p_cooperative(), 1.0);
  }
}

}  // namespace
}  // namespace tomaga
