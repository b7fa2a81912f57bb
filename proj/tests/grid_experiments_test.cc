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

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "tomaga/grid_experiments.h"
#include "tomaga/parallel.h"

namespace tomaga {
namespace {

TEST(ParallelForTest, RunsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(101);
  ParallelFor(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelForTest, RethrowsTaskError) {
  EXPECT_THROW(ParallelFor(10, 3,
                           [](std::size_t i) {
                             if (i == 7) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
}

TEST(MedianWithInfinityTest, UnreachedRunsCountAsInfinite) {
  EXPECT_EQ(MedianWithInfinity({5, 1, 3}), 3.0);
  EXPECT_EQ(MedianWithInfinity({1, 2, 3, std::nullopt}), 2.5);
  EXPECT_TRUE(std::isinf(MedianWithInfinity({1, std::nullopt})));
  EXPECT_TRUE(std::isinf(MedianWithInfinity({1, 3, std::nullopt, std::nullopt})));
  EXPECT_EQ(MedianWithInfinity({1, 3, 4, std::nullopt, std::nullopt}), 4.0);
  EXPECT_THROW(MedianWithInfinity({}), std::invalid_argument);
}

GridRunOptions Short() {
  GridRunOptions o;
  o.iterations = 300;
  o.window = 20;
  return o;
}

TEST(RunGridLearningTest, ReproducibleFromSeed) {
  const GridConfig env = MakeScenario(Scenario::kNearStag);
  GridAgentConfig agent;
  agent.theta = 20;
  const GridRun a = RunGridLearning(env, agent, AgentKind::kToMAGA, 4, Short());
  const GridRun b = RunGridLearning(env, agent, AgentKind::kToMAGA, 4, Short());
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.iterations_to_threshold, b.iterations_to_threshold);
  EXPECT_EQ(a.labels.size(), 300u);
  EXPECT_TRUE(a.logs.empty());
}

TEST(RunGridLearningTest, StopAtThresholdTruncates) {
  const GridConfig env = MakeScenario(Scenario::kNearStag);
  GridAgentConfig agent;
  agent.theta = 20;
  GridRunOptions o = Short();
  o.iterations = 3000;
  o.threshold = 0.5;
  o.keep_logs = true;
  const GridRun full = RunGridLearning(env, agent, AgentKind::kToMAGA, 8, o);
  o.stop_at_threshold = true;
  const GridRun cut = RunGridLearning(env, agent, AgentKind::kToMAGA, 8, o);
  ASSERT_TRUE(full.iterations_to_threshold.has_value());
  EXPECT_EQ(cut.iterations_to_threshold, full.iterations_to_threshold);
  EXPECT_EQ(static_cast<int>(cut.labels.size()),
            *cut.iterations_to_threshold + 1);
  EXPECT_EQ(cut.logs.size(), cut.labels.size());
}

GridComparisonSpec SmallComparison() {
  GridComparisonSpec s;
  s.scenarios = {{"near-stag", MakeScenario(Scenario::kNearStag)},
                 {"near-hares", MakeScenario(Scenario::kNearHares)}};
  s.variants = {AgentKind::kIndividual, AgentKind::kToMAGA};
  s.agent.theta = 20;
  s.options = Short();
  s.seeds = {11, 12, 13};
  return s;
}

TEST(RunGridworldComparisonTest, IndependentOfJobsAndScenarioOrder) {
  const GridComparisonSpec s = SmallComparison();
  const auto a = RunGridworldComparison(s, 1);
  const auto b = RunGridworldComparison(s, 4);
  GridComparisonSpec reversed = s;
  std::swap(reversed.scenarios[0], reversed.scenarios[1]);
  const auto c = RunGridworldComparison(reversed, 2);
  ASSERT_EQ(a.size(), 4u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].scenario, b[i].scenario);
    EXPECT_EQ(a[i].variant, b[i].variant);
    EXPECT_EQ(a[i].reached, b[i].reached);
    for (std::size_t k = 0; k < a[i].runs.size(); ++k) {
      EXPECT_EQ(a[i].runs[k].labels, b[i].runs[k].labels);
    }
    // Same cell sits at the mirrored scenario position in the reversed run.
    const auto& mirror = c[(i + 2) % 4];
    ASSERT_EQ(mirror.scenario, a[i].scenario);
    for (std::size_t k = 0; k < a[i].runs.size(); ++k) {
      EXPECT_EQ(a[i].runs[k].labels, mirror.runs[k].labels);
    }
  }
}

TEST(GridComparisonSpecTest, Validation) {
  GridComparisonSpec s = SmallComparison();
  s.seeds.clear();
  EXPECT_THROW(s.Validate(), std::invalid_argument);
  s = SmallComparison();
  s.scenarios.clear();
  EXPECT_THROW(s.Validate(), std::invalid_argument);
  s = SmallComparison();
  s.scenarios[1].name = s.scenarios[0].name;
  EXPECT_THROW(s.Validate(), std::invalid_argument);
}

}  // namespace
}  // namespace tomaga
