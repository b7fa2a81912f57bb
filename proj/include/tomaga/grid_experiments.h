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

#ifndef TOMAGA_GRID_EXPERIMENTS_H_
#define TOMAGA_GRID_EXPERIMENTS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tomaga/gridworld.h"
#include "tomaga/policy_learner.h"

namespace tomaga {

struct GridRunOptions {
  int iterations = 3000;
  int window = 50;
  double threshold = 0.8;
  // Stop as soon as the threshold is first reached.
  bool stop_at_threshold = false;
  bool keep_logs = false;
};

struct GridRun {
  std::uint64_t seed = 0;
  AgentKind variant = AgentKind::kIndividual;
  std::optional<int> iterations_to_threshold;
  std::vector<std::array<PolicyLabel, 2>> labels;
  std::vector<IterationLog> logs;  // filled when keep_logs
};

// Both learners share `agent` with kind replaced by `variant`.
GridRun RunGridLearning(const GridConfig& env, GridAgentConfig agent,
                        AgentKind variant, std::uint64_t seed,
                        const GridRunOptions& options);

struct NamedScenario {
  std::string name;
  GridConfig env;
};

struct GridComparisonSpec {
  std::vector<NamedScenario> scenarios;
  std::vector<AgentKind> variants = {AgentKind::kIndividual,
                                     AgentKind::kInequity,
                                     AgentKind::kGuiltNoToM,
                                     AgentKind::kToMAGA};
  GridAgentConfig agent;
  GridRunOptions options;
  std::vector<std::uint64_t> seeds;

  void Validate() const;
};

struct GridComparisonCell {
  std::string scenario;
  AgentKind variant;
  std::vector<GridRun> runs;  // one per seed, in seed order
  int reached = 0;
  // Median over seeds with unreached runs counted as +inf.
  double median_iterations = 0.0;
};

// Seed k of every (scenario, variant) pair runs on DeriveSeed(seeds[k],
// {Fnv1a64(scenario name)}), so variants share environment randomness and
// results do not depend on scenario order.
std::vector<GridComparisonCell> RunGridworldComparison(
    const GridComparisonSpec& spec, int jobs);

double MedianWithInfinity(std::vector<std::optional<int>> values);

}  // namespace tomaga

#endif  // TOMAGA_GRID_EXPERIMENTS_H_
