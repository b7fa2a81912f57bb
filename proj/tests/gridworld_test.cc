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

#include <algorithm>
#include <array>
#include <stdexcept>

#include "gtest/gtest.h"
#include "tomaga/gridworld.h"
#include "tomaga/rng.h"

namespace tomaga {
namespace {

using A = GridAction;
constexpr auto kC = PolicyLabel::kCooperative;
constexpr auto kU = PolicyLabel::kUncooperative;
constexpr auto kQ = PolicyLabel::kUnknown;

GridConfig StaticStag() {
  GridConfig c = MakeScenario(Scenario::kNearStag);
  c.stag_motion = StagMotion::kStatic;
  return c;
}

GridState At(Cell a, Cell b, Cell stag, int t = 0) {
  return {{a, b}, stag, t, false};
}

TEST(MoveTest, DirectionsOnRowColumnGrid) {
  EXPECT_EQ(Move({1, 1}, A::kLeft), (Cell{1, 0}));
  EXPECT_EQ(Move({1, 1}, A::kUp), (Cell{0, 1}));
  EXPECT_EQ(Move({1, 1}, A::kDown), (Cell{2, 1}));
  EXPECT_EQ(Move({1, 1}, A::kRight), (Cell{1, 2}));
  EXPECT_EQ(Move({1, 1}, A::kStay), (Cell{1, 1}));
  EXPECT_EQ(ChebyshevDistance({0, 0}, {3, 1}), 3);
}

TEST(StepTest, WallsAndObstaclesBlockMovement) {
  const GridConfig c = StaticStag();
  Rng rng(1);
  const StepResult r =
      Step(At({3, 1}, {3, 3}, {0, 1}), c, {A::kUp, A::kRight}, rng);
  EXPECT_EQ(r.next.agents[0], (Cell{3, 1}));  // (2, 1) is an obstacle
  EXPECT_EQ(r.next.agents[1], (Cell{3, 3}));  // off the grid
  EXPECT_EQ(r.event, TerminationEvent::kNone);
  EXPECT_EQ(r.next.timestep, 1);
}

TEST(StepTest, JointStagCapture) {
  const GridConfig c = StaticStag();
  Rng rng(1);
  const StepResult r =
      Step(At({3, 0}, {3, 2}, {3, 1}), c, {A::kRight, A::kLeft}, rng);
  EXPECT_EQ(r.event, TerminationEvent::kStagCaptured);
  EXPECT_EQ(r.rewards, (std::array<double, 2>{4, 4}));
  EXPECT_TRUE(r.next.terminated);
  EXPECT_EQ(LabelEpisode(r.next, r.event, c), (std::array{kC, kC}));
}

TEST(StepTest, LoneHareCaptureLeavesOtherOut) {
  const GridConfig c = StaticStag();
  Rng rng(1);
  const StepResult r =
      Step(At({1, 0}, {3, 3}, {3, 1}), c, {A::kUp, A::kStay}, rng);
  EXPECT_EQ(r.event, TerminationEvent::kHareCaptured);
  EXPECT_EQ(r.rewards, (std::array<double, 2>{3, 0}));
  EXPECT_EQ(LabelEpisode(r.next, r.event, c), (std::array{kU, kQ}));
}

TEST(StepTest, PartnerWaitingOnStagIsCooperative) {
  const GridConfig c = StaticStag();
  Rng rng(1);
  const StepResult r =
      Step(At({3, 0}, {1, 3}, {3, 1}), c, {A::kRight, A::kUp}, rng);
  EXPECT_EQ(r.event, TerminationEvent::kHareCaptured);
  EXPECT_EQ(r.rewards, (std::array<double, 2>{0, 3}));
  EXPECT_EQ(LabelEpisode(r.next, r.event, c), (std::array{kC, kU}));
}

TEST(StepTest, BothOnHaresShare) {
  const GridConfig c = StaticStag();
  Rng rng(1);
  const StepResult r =
      Step(At({1, 0}, {1, 3}, {3, 1}), c, {A::kUp, A::kUp}, rng);
  EXPECT_EQ(r.rewards, (std::array<double, 2>{2, 2}));
  EXPECT_EQ(LabelEpisode(r.next, r.event, c), (std::array{kU, kU}));
}

TEST(StepTest, TimeoutHasNoRewardAndUnknownLabels) {
  const GridConfig c = StaticStag();
  Rng rng(1);
  const StepResult r = Step(At({3, 0}, {3, 3}, {0, 1}, c.t_max - 1), c,
                            {A::kStay, A::kStay}, rng);
  EXPECT_EQ(r.event, TerminationEvent::kTimeout);
  EXPECT_EQ(r.rewards, (std::array<double, 2>{0, 0}));
  EXPECT_EQ(LabelEpisode(r.next, r.event, c), (std::array{kQ, kQ}));
  EXPECT_THROW(Step(r.next, c, {A::kStay, A::kStay}, rng), std::logic_error);
}

TEST(StepTest, CaptureOrderOption) {
  // Both agents step onto the stag's cell; a moving stag escapes only if
  // it moves before the capture check.
  GridConfig c = MakeScenario(Scenario::kNearStag);
  const GridState s = At({3, 0}, {3, 2}, {3, 1});
  Rng rng(5);
  EXPECT_EQ(Step(s, c, {A::kRight, A::kLeft}, rng).event,
            TerminationEvent::kStagCaptured);
  c.capture_before_stag_move = false;
  int escapes = 0;
  for (int i = 0; i < 200; ++i) {
    escapes += Step(s, c, {A::kRight, A::kLeft}, rng).event !=
               TerminationEvent::kStagCaptured;
  }
  EXPECT_GT(escapes, 0);
  EXPECT_LT(escapes, 200);
}

TEST(StepTest, StagWalksOnFreeCellsOnly) {
  const GridConfig c = MakeScenario(Scenario::kNearStag);
  Rng rng(6);
  GridState s = At({3, 0}, {3, 3}, {3, 1});
  for (int i = 0; i < 5000; ++i) {
    s.timestep = 0;
    const StepResult r = Step(s, c, {A::kStay, A::kStay}, rng);
    ASSERT_TRUE(c.IsFree(r.next.stag));
    ASSERT_LE(ChebyshevDistance(r.next.stag, s.stag), 1);
    s.stag = r.next.stag;
    if (s.stag == s.agents[0] || s.stag == s.agents[1]) s.stag = {0, 1};
  }
}

TEST(ScenarioTest, StartDistances) {
  auto nearest_hare = [](const GridConfig& c, Cell a) {
    int d = 100;
    for (Cell h : c.hare_cells) d = std::min(d, ChebyshevDistance(a, h));
    return d;
  };
  const GridConfig stag = MakeScenario(Scenario::kNearStag);
  const GridConfig hares = MakeScenario(Scenario::kNearHares);
  for (Cell a : stag.agent_starts) {
    EXPECT_LT(ChebyshevDistance(a, stag.stag_start), nearest_hare(stag, a));
  }
  for (Cell a : hares.agent_starts) {
    EXPECT_LT(nearest_hare(hares, a), ChebyshevDistance(a, hares.stag_start));
  }
  EXPECT_NO_THROW(stag.Validate());
  EXPECT_NO_THROW(hares.Validate());
  EXPECT_EQ(stag.AsPayoffMatrix(), PayoffMatrix::Create(4, 3, 2, 0));
  EXPECT_EQ(ParseScenario(ScenarioName(Scenario::kNearHares)),
            Scenario::kNearHares);
}

TEST(GridConfigTest, ValidationErrors) {
  GridConfig c = MakeScenario(Scenario::kNearStag);
  c.agent_starts[1] = c.agent_starts[0];
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = MakeScenario(Scenario::kNearStag);
  c.stag_start = {2, 1};
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = MakeScenario(Scenario::kNearStag);
  c.agent_starts[0] = {0, 0};
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = MakeScenario(Scenario::kNearStag);
  c.reward_hare_alone = 5;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(RollOutTest, BitIdenticalReplayFromSeed) {
  const GridConfig c = MakeScenario(Scenario::kNearHares);
  const JointPolicy random = [](const GridState&, Rng& rng) {
    return std::array{kGridActions[rng.UniformInt(5)],
                      kGridActions[rng.UniformInt(5)]};
  };
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng a(seed);
    Rng b(seed);
    const EpisodeRecord x = RollOut(c, random, a);
    const EpisodeRecord y = RollOut(c, random, b);
    ASSERT_EQ(x.transitions.size(), y.transitions.size());
    for (std::size_t t = 0; t < x.transitions.size(); ++t) {
      ASSERT_EQ(x.transitions[t].state, y.transitions[t].state);
      ASSERT_EQ(x.transitions[t].actions, y.transitions[t].actions);
      ASSERT_EQ(x.transitions[t].rewards, y.transitions[t].rewards);
      ASSERT_EQ(x.transitions[t].next, y.transitions[t].next);
    }
    ASSERT_EQ(x.labels, y.labels);
    ASSERT_LE(static_cast<int>(x.transitions.size()), c.t_max);
    ASSERT_NE(x.event, TerminationEvent::kNone);
  }
}

}  // namespace
}  // namespace tomaga
