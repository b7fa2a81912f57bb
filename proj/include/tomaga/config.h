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

#ifndef TOMAGA_CONFIG_H_
#define TOMAGA_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "tomaga/grid_experiments.h"
#include "tomaga/gridworld.h"
#include "tomaga/matrix_experiments.h"
#include "tomaga/stag_hunt.h"

namespace tomaga {

struct GridSpec {
  double lo = 0.0;  // exclusive
  double hi = 1.0;  // inclusive
  double step = 0.1;
};

struct AnalyzeConfig {
  std::vector<PayoffMatrix> matrices = {PayoffMatrix::Create(40, 30, 20, 0),
                                        PayoffMatrix::Create(5, 4, 2, 1)};
  // phi runs over (m, h] of each matrix with this step.
  double phi_step = 0.05;
  GridSpec theta{0.0, 50.0, 0.05};
};

struct TournamentConfig {
  TournamentSpec base;
  std::vector<int> group_sizes = {2, 4, 8};
  std::vector<Composition> compositions = {Composition::kHomogeneousToMAGA,
                                           Composition::kHomogeneousPavlov,
                                           Composition::kHeterogeneous};
  int seeds = 10;
};

struct GridworldConfig {
  GridComparisonSpec spec;  // seeds are derived from the base seed
  int seeds = 10;
};

struct WorkbenchConfig {
  AnalyzeConfig analyze;
  SweepSpec selfplay;
  TournamentConfig tournament;
  GridworldConfig gridworld;
};

// Built-in defaults, the values used when a key is absent from the file.
WorkbenchConfig DefaultConfig();

// Overlays `j` onto the defaults. Relative scenario paths resolve against
// `base_dir`. Throws std::invalid_argument on bad values or unknown names.
WorkbenchConfig ParseConfig(const nlohmann::json& j,
                            const std::filesystem::path& base_dir);
WorkbenchConfig LoadConfig(const std::filesystem::path& path);

GridConfig ParseGridConfig(const nlohmann::json& j);
GridConfig LoadGridConfig(const std::filesystem::path& path);
nlohmann::json GridConfigToJson(const GridConfig& config);

// Effective configuration, as recorded in run manifests.
nlohmann::json ConfigToJson(const WorkbenchConfig& config);

nlohmann::json PayoffsToJson(const PayoffMatrix& m);
PayoffMatrix ParsePayoffs(const nlohmann::json& j);

// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string Fnv1aHex(const std::string& bytes);

// Seed list k -> DeriveSeed(base, {salt, k}).
std::vector<std::uint64_t> SeedList(std::uint64_t base, std::uint64_t salt,
                                    int count);

}  // namespace tomaga

#endif  // TOMAGA_CONFIG_H_
