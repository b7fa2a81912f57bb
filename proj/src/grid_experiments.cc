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

#include "tomaga/grid_experiments.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "tomaga/parallel.h"
#include "tomaga/rng.h"

namespace tomaga {

GridRun RunGridLearning(const GridConfig& env, GridAgentConfig agent,
                        AgentKind variant, std::uint64_t seed,
                        const GridRunOptions& options) {
  env.Validate();
  agent.kind = variant;
  std::array<GridLearner, 2> learners{MakeGridLearner(agent),
                                      MakeGridLearner(agent)};
  Rng rng(seed);
  GridRun run;
  run.seed = seed;
  run.variant = variant;
  run.labels.reserve(options.iterations);
  // Running count of C labels (both agents) inside the trailing window.
  int window_c = 0;
  const double needed = options.threshold * 2.0 * options.window - 1e-9;
  for (int t = 0; t < options.iterations; ++t) {
    IterationLog log = RunIteration(learners, env, rng);
    run.labels.push_back({log.agents[0].label, log.agents[1].label});
    for (const auto& a : log.agents) {
      if (a.label == PolicyLabel::kCooperative) ++window_c;
    }
    if (t >= options.window) {
      for (PolicyLabel l : run.labels[t - options.window]) {
        if (l == PolicyLabel::kCooperative) --window_c;
      }
    }
    if (options.keep_logs) run.logs.push_back(log);
    if (!run.iterations_to_threshold && t + 1 >= options.window &&
        window_c >= needed) {
      run.iterations_to_threshold = t;
      if (options.stop_at_threshold) break;
    }
  }
  return run;
}

void GridComparisonSpec::Validate() const {
  if (scenarios.empty()) throw std::invalid_argument("no scenarios");
  if (variants.empty()) throw std::invalid_argument("no agent variants");
  if (seeds.empty()) throw std::invalid_argument("no seeds");
  if (options.iterations < 1 || options.window < 1 ||
      options.window > options.iterations) {
    throw std::invalid_argument("window must lie in [1, iterations]");
  }
  std::set<std::string> names;
  for (const NamedScenario& s : scenarios) {
    if (!names.insert(s.name).second) {
      throw std::invalid_argument("duplicate scenario name " + s.name);
    }
    s.env.Validate();
  }
}

double MedianWithInfinity(std::vector<std::optional<int>> values) {
  if (values.empty()) throw std::invalid_argument("median of nothing");
  std::vector<double> v;
  for (const auto& x : values) {
    v.push_back(x ? static_cast<double>(*x)
                  : std::numeric_limits<double>::infinity());
  }
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  const double lo = v[n / 2 - 1];
  const double hi = v[n / 2];
  if (std::isinf(hi)) return hi;
  return 0.5 * (lo + hi);
}

std::vector<GridComparisonCell> RunGridworldComparison(
    const GridComparisonSpec& spec, int jobs) {
  spec.Validate();
  const std::size_t ns = spec.scenarios.size();
  const std::size_t nv = spec.variants.size();
  const std::size_t nk = spec.seeds.size();
  std::vector<GridRun> runs(ns * nv * nk);
  ParallelFor(runs.size(), jobs, [&](std::size_t idx) {
    const std::size_t k = idx % nk;
    const std::size_t v = (idx / nk) % nv;
    const std::size_t s = idx / nk / nv;
    const NamedScenario& scenario = spec.scenarios[s];
    runs[idx] = RunGridLearning(
        scenario.env, spec.agent, spec.variants[v],
        DeriveSeed(spec.seeds[k], {Fnv1a64(scenario.name)}), spec.options);
  });
  std::vector<GridComparisonCell> cells;
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t v = 0; v < nv; ++v) {
      GridComparisonCell cell;
      cell.scenario = spec.scenarios[s].name;
      cell.variant = spec.variants[v];
      std::vector<std::optional<int>> its;
      for (std::size_t k = 0; k < nk; ++k) {
        GridRun& r = runs[(s * nv + v) * nk + k];
        if (r.iterations_to_threshold) ++cell.reached;
        its.push_back(r.iterations_to_threshold);
        cell.runs.push_back(std::move(r));
      }
      cell.median_iterations = MedianWithInfinity(its);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace tomaga
