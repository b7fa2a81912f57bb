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

#ifndef TOMAGA_GRIDWORLD_H_
#define TOMAGA_GRIDWORLD_H_

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "tomaga/rng.h"
#include "tomaga/stag_hunt.h"

namespace tomaga {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

int ChebyshevDistance(Cell a, Cell b);

enum class GridAction { kLeft = 0, kUp = 1, kDown = 2, kRight = 3, kStay = 4 };

inline constexpr int kNumGridActions = 5;
inline constexpr std::array<GridAction, kNumGridActions> kGridActions = {
    GridAction::kLeft, GridAction::kUp, GridAction::kDown, GridAction::kRight,
    GridAction::kStay};

Cell Move(Cell from, GridAction action);

enum class StagMotion { kStatic, kRandomWalk };

std::string_view StagMotionName(StagMotion motion);
std::optional<StagMotion> ParseStagMotion(std::string_view name);

struct GridConfig {
  int width = 4;
  int height = 4;
  std::vector<Cell> obstacles;
  std::vector<Cell> hare_cells;
  Cell stag_start;
  std::array<Cell, 2> agent_starts;
  int t_max = 20;
  double reward_stag_joint = 4.0;
  double reward_hare_shared = 2.0;
  double reward_hare_alone = 3.0;
  double reward_left_out = 0.0;
  StagMotion stag_motion = StagMotion::kRandomWalk;
  // When true, captures are resolved against the stag's cell before it
  // moves, so agents catch it by stepping into its square. When false the
  // stag moves first and agents must land on its new cell.
  bool capture_before_stag_move = true;

  bool InBounds(Cell c) const;
  bool IsObstacle(Cell c) const;
  bool IsHare(Cell c) const;
  bool IsFree(Cell c) const { return InBounds(c) && !IsObstacle(c); }
  int CellIndex(Cell c) const { return c.row * width + c.col; }
  int NumCells() const { return width * height; }

  // Throws std::invalid_argument on any broken layout invariant.
  void Validate() const;

  // (h, c, m, g) = (stag joint, hare alone, hare shared, left out).
  PayoffMatrix AsPayoffMatrix() const;
};

struct GridState {
  std::array<Cell, 2> agents;
  Cell stag;
  int timestep = 0;
  bool terminated = false;

  bool operator==(const GridState&) const = default;
};

GridState InitialState(const GridConfig& config);

enum class TerminationEvent { kNone, kStagCaptured, kHareCaptured, kTimeout };

std::string_view TerminationName(TerminationEvent event);

struct StepResult {
  GridState next;
  TerminationEvent event = TerminationEvent::kNone;
  std::array<double, 2> rewards{0.0, 0.0};
};

// Simultaneous move. Moves off the grid or into obstacles become Stay.
// Throws std::logic_error on a terminated state.
StepResult Step(const GridState& state, const GridConfig& config,
                const std::array<GridAction, 2>& actions, Rng& rng);

// Labels from the terminal state: joint stag capture gives (C, C); on a
// hare capture each hare-taker is U, an agent on the stag's cell is C and
// anyone else is Unknown; a timeout is (Unknown, Unknown).
std::array<PolicyLabel, 2> LabelEpisode(const GridState& terminal,
                                        TerminationEvent event,
                                        const GridConfig& config);

struct Transition {
  GridState state;
  std::array<GridAction, 2> actions;
  std::array<double, 2> rewards;
  GridState next;
};

struct EpisodeRecord {
  std::vector<Transition> transitions;
  std::array<double, 2> terminal_rewards{0.0, 0.0};
  std::array<PolicyLabel, 2> labels{PolicyLabel::kUnknown,
                                    PolicyLabel::kUnknown};
  TerminationEvent event = TerminationEvent::kNone;
};

using JointPolicy =
    std::function<std::array<GridAction, 2>(const GridState&, Rng&)>;

// Plays one episode to termination with the given joint policy.
EpisodeRecord RollOut(const GridConfig& config, const JointPolicy& policy,
                      Rng& rng);

enum class Scenario { kNearStag, kNearHares };

std::string_view ScenarioName(Scenario s);
std::optional<Scenario> ParseScenario(std::string_view name);

// Built-in layouts; the shipped config files hold the same coordinates.
GridConfig MakeScenario(Scenario which);

}  // namespace tomaga

#endif  // TOMAGA_GRIDWORLD_H_
