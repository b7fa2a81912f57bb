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

#include "tomaga/config.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "tomaga/rng.h"

namespace tomaga {
namespace {

using nlohmann::json;

template <typename T>
void Read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

Cell ParseCell(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("cells are [row, col] pairs");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<Cell> ParseCells(const json& j) {
  std::vector<Cell> cells;
  for (const json& c : j) cells.push_back(ParseCell(c));
  return cells;
}

json CellJson(Cell c) { return json::array({c.row, c.col}); }

AgentKind ParseKind(const std::string& name) {
  auto kind = ParseAgentKind(name);
  if (!kind) throw std::invalid_argument("unknown agent kind: " + name);
  return *kind;
}

void ParseBeliefs(const json& j, ToMState& tom) {
  double b0 = tom.zero_order.p_cooperative();
  double b1 = tom.first_order.p_cooperative();
  Read(j, "zero_order", b0);
  Read(j, "first_order", b1);
  tom.zero_order = Belief(b0);
  tom.first_order = Belief(b1);
  Read(j, "confidence", tom.confidence);
  Read(j, "learning_rate", tom.learning_rate);
  tom.Validate();
}

void ParseExploration(const json& j, ExplorationConfig& ex) {
  if (j.contains("mode")) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "softmax") {
      ex.mode = ExplorationMode::kSoftmax;
    } else if (mode == "epsilon-greedy") {
      ex.mode = ExplorationMode::kEpsilonGreedy;
    } else {
      throw std::invalid_argument("unknown exploration mode: " + mode);
    }
  }
  Read(j, "temperature", ex.temperature);
  Read(j, "decay", ex.temperature_decay);
  Read(j, "min_temperature", ex.min_temperature);
  Read(j, "epsilon", ex.epsilon);
  ex.Validate();
}

void ParseMatrixAgent(const json& j, MatrixAgentConfig& a) {
  Read(j, "theta", a.theta);
  Read(j, "alpha", a.alpha);
  Read(j, "gamma", a.gamma);
  Read(j, "pavlov_n", a.pavlov_n);
  Read(j, "pavlov_p0", a.pavlov_p0);
  if (j.contains("exploration")) ParseExploration(j.at("exploration"), a.exploration);
  if (j.contains("beliefs")) ParseBeliefs(j.at("beliefs"), a.tom);
}

void ParseSelfPlay(const json& j, SweepSpec& s) {
  if (j.contains("payoffs")) s.matrix = ParsePayoffs(j.at("payoffs"));
  if (j.contains("p_grid")) s.p_grid = j.at("p_grid").get<std::vector<double>>();
  Read(j, "iterations", s.iterations);
  Read(j, "repetitions", s.repetitions);
  Read(j, "tail_window", s.tail_window);
  if (j.contains("variants")) {
    s.variants.clear();
    for (const auto& v : j.at("variants")) s.variants.push_back(ParseKind(v.get<std::string>()));
  }
  if (j.contains("belief_init")) {
    const std::string name = j.at("belief_init").get<std::string>();
    auto init = ParseBeliefInit(name);
    if (!init) throw std::invalid_argument("unknown belief_init: " + name);
    s.belief_init = *init;
  }
  if (j.contains("agent")) ParseMatrixAgent(j.at("agent"), s.agent);
  s.Validate();
}

void ParseTournament(const json& j, TournamentConfig& t) {
  if (j.contains("payoffs")) t.base.matrix = ParsePayoffs(j.at("payoffs"));
  Read(j, "rounds", t.base.rounds);
  Read(j, "window", t.base.window);
  Read(j, "group_sizes", t.group_sizes);
  Read(j, "seeds", t.seeds);
  if (j.contains("compositions")) {
    t.compositions.clear();
    for (const auto& c : j.at("compositions")) {
      auto comp = ParseComposition(c.get<std::string>());
      if (!comp) throw std::invalid_argument("unknown composition");
      t.compositions.push_back(*comp);
    }
  }
  if (j.contains("learner")) ParseMatrixAgent(j.at("learner"), t.base.learner);
  if (j.contains("pavlov")) {
    const json& p = j.at("pavlov");
    Read(p, "n", t.base.pavlov.pavlov_n);
    Read(p, "p0", t.base.pavlov.pavlov_p0);
  }
  if (t.seeds < 1) throw std::invalid_argument("tournament seeds must be >= 1");
  for (int n : t.group_sizes) {
    TournamentSpec s = t.base;
    s.group_size = n;
    s.Validate();
  }
}

void ParseGridworld(const json& j, const std::filesystem::path& base_dir,
                    GridworldConfig& g) {
  GridComparisonSpec& s = g.spec;
  if (j.contains("scenarios")) {
    s.scenarios.clear();
    for (const auto& [name, value] : j.at("scenarios").items()) {
      GridConfig env = value.is_string()
                           ? LoadGridConfig(base_dir / value.get<std::string>())
                           : ParseGridConfig(value);
      s.scenarios.push_back({name, env});
    }
  }
  if (j.contains("variants")) {
    s.variants.clear();
    for (const auto& v : j.at("variants")) s.variants.push_back(ParseKind(v.get<std::string>()));
  }
  GridAgentConfig& a = s.agent;
  Read(j, "theta", a.theta);
  Read(j, "time_bucket_width", a.time_bucket_width);
  Read(j, "guilt_on_unknown", a.guilt_on_unknown);
  if (j.contains("inequity")) {
    const json& q = j.at("inequity");
    Read(q, "advantageous", a.inequity.theta_advantageous);
    Read(q, "disadvantageous", a.inequity.theta_disadvantageous);
    a.inequity.Validate();
  }
  if (j.contains("beliefs")) ParseBeliefs(j.at("beliefs"), a.tom);
  if (j.contains("learner")) {
    const json& l = j.at("learner");
    Read(l, "step_size", a.hyper.step_size);
    Read(l, "gamma", a.hyper.gamma);
    Read(l, "clip", a.hyper.clip);
    Read(l, "epochs", a.hyper.epochs);
    Read(l, "entropy_weight", a.hyper.entropy_weight);
    Read(l, "value_step", a.hyper.value_step);
    a.hyper.Validate();
  }
  Read(j, "iterations", s.options.iterations);
  Read(j, "window", s.options.window);
  Read(j, "threshold", s.options.threshold);
  Read(j, "seeds", g.seeds);
  if (g.seeds < 1) throw std::invalid_argument("gridworld seeds must be >= 1");
}

}  // namespace

WorkbenchConfig DefaultConfig() {
  WorkbenchConfig c;
  c.selfplay.agent.theta = 200.0;
  c.tournament.base.learner.theta = 200.0;
  GridComparisonSpec& g = c.gridworld.spec;
  g.scenarios = {{"near-stag", MakeScenario(Scenario::kNearStag)},
                 {"near-hares", MakeScenario(Scenario::kNearHares)}};
  g.agent.theta = 20.0;
  g.agent.inequity = {20.0, 20.0, 2};
  g.options.iterations = 6000;
  g.options.window = 50;
  g.options.threshold = 0.8;
  return c;
}

WorkbenchConfig ParseConfig(const nlohmann::json& j,
                            const std::filesystem::path& base_dir) {
  WorkbenchConfig c = DefaultConfig();
  try {
    if (j.contains("analyze")) {
      const json& a = j.at("analyze");
      if (a.contains("payoffs")) {
        c.analyze.matrices.clear();
        for (const json& m : a.at("payoffs")) {
          c.analyze.matrices.push_back(ParsePayoffs(m));
        }
      }
      Read(a, "phi_step", c.analyze.phi_step);
      if (a.contains("theta")) {
        const json& t = a.at("theta");
        Read(t, "lo", c.analyze.theta.lo);
        Read(t, "hi", c.analyze.theta.hi);
        Read(t, "step", c.analyze.theta.step);
      }
    }
    if (j.contains("matrix_selfplay")) ParseSelfPlay(j.at("matrix_selfplay"), c.selfplay);
    if (j.contains("tournament")) ParseTournament(j.at("tournament"), c.tournament);
    if (j.contains("gridworld")) ParseGridworld(j.at("gridworld"), base_dir, c.gridworld);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return c;
}

WorkbenchConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("config " + path.string() + ": " + e.what());
  }
  return ParseConfig(j, path.parent_path());
}

GridConfig ParseGridConfig(const nlohmann::json& j) {
  GridConfig g;
  try {
    Read(j, "width", g.width);
    Read(j, "height", g.height);
    if (j.contains("obstacles")) g.obstacles = ParseCells(j.at("obstacles"));
    if (j.contains("hares")) g.hare_cells = ParseCells(j.at("hares"));
    if (j.contains("stag_start")) g.stag_start = ParseCell(j.at("stag_start"));
    if (j.contains("agent_starts")) {
      const std::vector<Cell> starts = ParseCells(j.at("agent_starts"));
      if (starts.size() != 2) {
        throw std::invalid_argument("agent_starts needs two cells");
      }
      g.agent_starts = {starts[0], starts[1]};
    }
    Read(j, "t_max", g.t_max);
    if (j.contains("rewards")) {
      const json& r = j.at("rewards");
      Read(r, "stag_joint", g.reward_stag_joint);
      Read(r, "hare_shared", g.reward_hare_shared);
      Read(r, "hare_alone", g.reward_hare_alone);
      Read(r, "left_out", g.reward_left_out);
    }
    if (j.contains("stag_motion")) {
      const std::string name = j.at("stag_motion").get<std::string>();
      auto motion = ParseStagMotion(name);
      if (!motion) throw std::invalid_argument("unknown stag_motion: " + name);
      g.stag_motion = *motion;
    }
    Read(j, "capture_before_stag_move", g.capture_before_stag_move);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("grid config: ") + e.what());
  }
  g.Validate();
  return g;
}

GridConfig LoadGridConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open grid config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("grid config " + path.string() + ": " + e.what());
  }
  return ParseGridConfig(j);
}

nlohmann::json GridConfigToJson(const GridConfig& g) {
  json obstacles = json::array();
  for (Cell c : g.obstacles) obstacles.push_back(CellJson(c));
  json hares = json::array();
  for (Cell c : g.hare_cells) hares.push_back(CellJson(c));
  return {
      {"width", g.width},
      {"height", g.height},
      {"obstacles", obstacles},
      {"hares", hares},
      {"stag_start", CellJson(g.stag_start)},
      {"agent_starts",
       json::array({CellJson(g.agent_starts[0]), CellJson(g.agent_starts[1])})},
      {"t_max", g.t_max},
      {"rewards",
       {{"stag_joint", g.reward_stag_joint},
        {"hare_shared", g.reward_hare_shared},
        {"hare_alone", g.reward_hare_alone},
        {"left_out", g.reward_left_out}}},
      {"stag_motion", StagMotionName(g.stag_motion)},
      {"capture_before_stag_move", g.capture_before_stag_move},
  };
}

nlohmann::json ConfigToJson(const WorkbenchConfig& c) {
  auto beliefs = [](const ToMState& t) {
    return json{{"zero_order", t.zero_order.p_cooperative()},
                {"first_order", t.first_order.p_cooperative()},
                {"confidence", t.confidence},
                {"learning_rate", t.learning_rate}};
  };
  auto matrix_agent = [&](const MatrixAgentConfig& a) {
    const ExplorationConfig& ex = a.exploration;
    return json{
        {"theta", a.theta},
        {"alpha", a.alpha},
        {"gamma", a.gamma},
        {"pavlov_n", a.pavlov_n},
        {"pavlov_p0", a.pavlov_p0},
        {"exploration",
         {{"mode", ex.mode == ExplorationMode::kSoftmax ? "softmax"
                                                        : "epsilon-greedy"},
          {"temperature", ex.temperature},
          {"decay", ex.temperature_decay},
          {"min_temperature", ex.min_temperature},
          {"epsilon", ex.epsilon}}},
        {"beliefs", beliefs(a.tom)}};
  };
  auto kinds = [](const std::vector<AgentKind>& v) {
    json out = json::array();
    for (AgentKind k : v) out.push_back(AgentKindName(k));
    return out;
  };

  json analyze_payoffs = json::array();
  for (const PayoffMatrix& m : c.analyze.matrices) {
    analyze_payoffs.push_back(PayoffsToJson(m));
  }
  json compositions = json::array();
  for (Composition k : c.tournament.compositions) {
    compositions.push_back(CompositionName(k));
  }
  json scenarios = json::object();
  for (const NamedScenario& s : c.gridworld.spec.scenarios) {
    scenarios[s.name] = GridConfigToJson(s.env);
  }
  const GridAgentConfig& ga = c.gridworld.spec.agent;
  const PolicyHyper& hy = ga.hyper;
  return {
      {"analyze",
       {{"payoffs", analyze_payoffs},
        {"phi_step", c.analyze.phi_step},
        {"theta",
         {{"lo", c.analyze.theta.lo},
          {"hi", c.analyze.theta.hi},
          {"step", c.analyze.theta.step}}}}},
      {"matrix_selfplay",
       {{"payoffs", PayoffsToJson(c.selfplay.matrix)},
        {"p_grid", c.selfplay.p_grid},
        {"iterations", c.selfplay.iterations},
        {"repetitions", c.selfplay.repetitions},
        {"tail_window", c.selfplay.tail_window},
        {"variants", kinds(c.selfplay.variants)},
        {"belief_init", BeliefInitName(c.selfplay.belief_init)},
        {"agent", matrix_agent(c.selfplay.agent)}}},
      {"tournament",
       {{"payoffs", PayoffsToJson(c.tournament.base.matrix)},
        {"rounds", c.tournament.base.rounds},
        {"window", c.tournament.base.window},
        {"group_sizes", c.tournament.group_sizes},
        {"compositions", compositions},
        {"seeds", c.tournament.seeds},
        {"learner", matrix_agent(c.tournament.base.learner)},
        {"pavlov",
         {{"n", c.tournament.base.pavlov.pavlov_n},
          {"p0", c.tournament.base.pavlov.pavlov_p0}}}}},
      {"gridworld",
       {{"scenarios", scenarios},
        {"variants", kinds(c.gridworld.spec.variants)},
        {"theta", ga.theta},
        {"inequity",
         {{"advantageous", ga.inequity.theta_advantageous},
          {"disadvantageous", ga.inequity.theta_disadvantageous}}},
        {"beliefs", beliefs(ga.tom)},
        {"learner",
         {{"step_size", hy.step_size},
          {"gamma", hy.gamma},
          {"clip", hy.clip},
          {"epochs", hy.epochs},
          {"entropy_weight", hy.entropy_weight},
          {"value_step", hy.value_step}}},
        {"time_bucket_width", ga.time_bucket_width},
        {"guilt_on_unknown", ga.guilt_on_unknown},
        {"iterations", c.gridworld.spec.options.iterations},
        {"window", c.gridworld.spec.options.window},
        {"threshold", c.gridworld.spec.options.threshold},
        {"seeds", c.gridworld.seeds}}},
  };
}

nlohmann::json PayoffsToJson(const PayoffMatrix& m) {
  return {{"h", m.h()}, {"c", m.c()}, {"m", m.m()}, {"g", m.g()}};
}

PayoffMatrix ParsePayoffs(const nlohmann::json& j) {
  return PayoffMatrix::Create(j.at("h").get<double>(), j.at("c").get<double>(),
                              j.at("m").get<double>(), j.at("g").get<double>());
}

std::string Fnv1aHex(const std::string& bytes) {
  const std::uint64_t h = Fnv1a64(bytes);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::uint64_t> SeedList(std::uint64_t base, std::uint64_t salt,
                                    int count) {
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < count; ++k) {
    seeds.push_back(DeriveSeed(base, {salt, static_cast<std::uint64_t>(k)}));
  }
  return seeds;
}

}  // namespace tomaga
