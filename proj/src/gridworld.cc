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

#include "tomaga/gridworld.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tomaga {
namespace {

std::string CellString(Cell c) {
  std::ostringstream s;
  s << "(" << c.row << ", " << c.col << ")";
  return s.str();
}

bool Contains(const std::vector<Cell>& cells, Cell c) {
  return std::find(cells.begin(), cells.end(), c) != cells.end();
}

Cell MoveStag(Cell stag, const GridConfig& config, Rng& rng) {
  if (config.stag_motion == StagMotion::kStatic) return stag;
  std::vector<Cell> options;
  for (GridAction a : kGridActions) {
    const Cell c = Move(stag, a);
    if (config.IsFree(c)) options.push_back(c);
  }
  return options[rng.UniformInt(options.size())];
}

// Checks (a) joint stag capture, (b) hare captures. Timeout is the
// caller's concern.
TerminationEvent Resolve(const std::array<Cell, 2>& agents, Cell stag,
                         const GridConfig& config,
                         std::array<double, 2>& rewards) {
  if (agents[0] == stag && agents[1] == stag) {
    rewards = {config.reward_stag_joint, config.reward_stag_joint};
    return TerminationEvent::kStagCaptured;
  }
  const bool hare0 = config.IsHare(agents[0]);
  const bool hare1 = config.IsHare(agents[1]);
  if (hare0 && hare1) {
    rewards = {config.reward_hare_shared, config.reward_hare_shared};
    return TerminationEvent::kHareCaptured;
  }
  if (hare0 || hare1) {
    rewards = hare0 ? std::array{config.reward_hare_alone, config.reward_left_out}
                    : std::array{config.reward_left_out, config.reward_hare_alone};
    return TerminationEvent::kHareCaptured;
  }
  return TerminationEvent::kNone;
}

}  // namespace

int ChebyshevDistance(Cell a, Cell b) {
  return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
}

Cell Move(Cell from, GridAction action) {
  switch (action) {
    case GridAction::kLeft:
      return {from.row, from.col - 1};
    case GridAction::kUp:
      return {from.row - 1, from.col};
    case GridAction::kDown:
      return {from.row + 1, from.col};
    case GridAction::kRight:
      return {from.row, from.col + 1};
    case GridAction::kStay:
      return from;
  }
  return from;
}

std::string_view StagMotionName(StagMotion motion) {
  return motion == StagMotion::kStatic ? "static" : "random-walk";
}

std::optional<StagMotion> ParseStagMotion(std::string_view name) {
  if (name == "static") return StagMotion::kStatic;
  if (name == "random-walk") return StagMotion::kRandomWalk;
  return std::nullopt;
}

bool GridConfig::InBounds(Cell c) const {
  return c.row >= 0 && c.row < height && c.col >= 0 && c.col < width;
}

bool GridConfig::IsObstacle(Cell c) const { return Contains(obstacles, c); }

bool GridConfig::IsHare(Cell c) const { return Contains(hare_cells, c); }

void GridConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("grid config: " + what);
  };
  if (width < 1 || height < 1) fail("grid must be at least 1x1");
  if (t_max < 1) fail("t_max must be >= 1");
  for (Cell c : obstacles) {
    if (!InBounds(c)) fail("obstacle " + CellString(c) + " out of bounds");
  }
  if (hare_cells.empty()) fail("at least one hare cell is required");
  for (Cell c : hare_cells) {
    if (!IsFree(c)) fail("hare " + CellString(c) + " is not a free cell");
  }
  if (!IsFree(stag_start)) fail("stag start is not a free cell");
  for (Cell c : agent_starts) {
    if (!IsFree(c)) fail("agent start " + CellString(c) + " is not free");
    if (IsHare(c)) fail("agent start " + CellString(c) + " is a hare cell");
  }
  if (agent_starts[0] == agent_starts[1]) fail("agent starts must differ");
  AsPayoffMatrix();
}

PayoffMatrix GridConfig::AsPayoffMatrix() const {
  return PayoffMatrix::Create(reward_stag_joint, reward_hare_alone,
                              reward_hare_shared, reward_left_out);
}

GridState InitialState(const GridConfig& config) {
  return {config.agent_starts, config.stag_start, 0, false};
}

std::string_view TerminationName(TerminationEvent event) {
  switch (event) {
    case TerminationEvent::kNone:
      return "none";
    case TerminationEvent::kStagCaptured:
      return "stag";
    case TerminationEvent::kHareCaptured:
      return "hare";
    case TerminationEvent::kTimeout:
      return "timeout";
  }
  return "none";
}

StepResult Step(const GridState& state, const GridConfig& config,
                const std::array<GridAction, 2>& actions, Rng& rng) {
  if (state.terminated) {
    throw std::logic_error("step called on a terminated grid state");
  }
  StepResult result;
  GridState& next = result.next;
  next = state;
  for (int k = 0; k < 2; ++k) {
    const Cell target = Move(state.agents[k], actions[k]);
    if (config.IsFree(target)) next.agents[k] = target;
  }
  ++next.timestep;
  if (config.capture_before_stag_move) {
    result.event = Resolve(next.agents, next.stag, config, result.rewards);
    if (result.event == TerminationEvent::kNone) {
      next.stag = MoveStag(next.stag, config, rng);
    }
  } else {
    next.stag = MoveStag(next.stag, config, rng);
    result.event = Resolve(next.agents, next.stag, config, result.rewards);
  }
  if (result.event == TerminationEvent::kNone && next.timestep >= config.t_max) {
    result.event = TerminationEvent::kTimeout;
    result.rewards = {0.0, 0.0};
  }
  next.terminated = result.event != TerminationEvent::kNone;
  return result;
}

std::array<PolicyLabel, 2> LabelEpisode(const GridState& terminal,
                                        TerminationEvent event,
                                        const GridConfig& config) {
  switch (event) {
    case TerminationEvent::kStagCaptured:
      return {PolicyLabel::kCooperative, PolicyLabel::kCooperative};
    case TerminationEvent::kHareCaptured: {
      std::array<PolicyLabel, 2> labels{};
      for (int k = 0; k < 2; ++k) {
        const Cell c = terminal.agents[k];
        labels[k] = config.IsHare(c)        ? PolicyLabel::kUncooperative
                    : c == terminal.stag    ? PolicyLabel::kCooperative
                                            : PolicyLabel::kUnknown;
      }
      return labels;
    }
    case TerminationEvent::kTimeout:
    case TerminationEvent::kNone:
      break;
  }
  return {PolicyLabel::kUnknown, PolicyLabel::kUnknown};
}

EpisodeRecord RollOut(const GridConfig& config, const JointPolicy& policy,
                      Rng& rng) {
  EpisodeRecord record;
  GridState state = InitialState(config);
  while (!state.terminated) {
    const std::array<GridAction, 2> actions = policy(state, rng);
    StepResult step = Step(state, config, actions, rng);
    record.transitions.push_back({state, actions, step.rewards, step.next});
    record.event = step.event;
    record.terminal_rewards = step.rewards;
    state = step.next;
  }
  record.labels = LabelEpisode(state, record.event, config);
  return record;
}

std::string_view ScenarioName(Scenario s) {
  return s == Scenario::kNearStag ? "near-stag" : "near-hares";
}

std::optional<Scenario> ParseScenario(std::string_view name) {
  if (name == "near-stag") return Scenario::kNearStag;
  if (name == "near-hares") return Scenario::kNearHares;
  return std::nullopt;
}

//   H . . H      row 0
//   . . . .      row 1
//   . # # .      row 2
//   . . . .      row 3
GridConfig MakeScenario(Scenario which) {
  GridConfig config;
  config.hare_cells = {{0, 0}, {0, 3}};
  config.obstacles = {{2, 1}, {2, 2}};
  if (which == Scenario::kNearStag) {
    config.stag_start = {3, 1};
    config.agent_starts = {Cell{3, 0}, Cell{3, 3}};
  } else {
    config.stag_start = {3, 1};
    config.agent_starts = {Cell{1, 0}, Cell{1, 3}};
  }
  config.Validate();
  return config;
}

}  // namespace tomaga
