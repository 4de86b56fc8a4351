// Copyright 2026 The omcts Authors.
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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omcts/bench/agents.hpp"

namespace omcts::bench {

inline constexpr double kDefaultQ = 0.25;

// One agent configuration on one game.
struct RunSpec {
  std::string game = "gapworld";
  AgentKind agent = AgentKind::kOmcts;
  double c = 1.25;
  int rl = 5;
  std::optional<double> q;  // MixMax only
  std::int64_t budget = 1000;
  int repetitions = 1;
  std::uint64_t seed = 0;
  bool timing = false;
};

// Throws ConfigError.
void validate(const RunSpec& spec);

// Result row of one episode. Failed episodes carry `error` and no results.
struct RunRecord {
  std::string game;
  std::string agent;
  std::int64_t budget = 0;
  double c = 0.0;
  int rl = 0;
  std::optional<double> q;
  std::uint64_t seed = 0;
  int episode = 0;
  bool win = false;
  double score = 0.0;
  int decisions = 0;
  std::int64_t fm_calls = 0;
  std::optional<double> ms;
  std::optional<std::string> error;

  bool failed() const { return error.has_value(); }
  bool operator==(const RunRecord&) const = default;
};

// Extra per-episode detail that is not part of the CSV schema.
struct EpisodeTrace {
  std::vector<std::int64_t> calls_per_decision;
  std::vector<int> actions;
};

// Seed of one episode of a spec: derived from the spec seed and the index.
std::uint64_t episode_seed(std::uint64_t spec_seed, int episode);

// Plays one full game, running a fresh search with `budget` metered calls at
// every decision point. Throws ConfigError for an unknown game or agent.
RunRecord run_episode(const RunSpec& spec, int episode,
                      EpisodeTrace* trace = nullptr);

// Every episode of a spec, in order.
std::vector<RunRecord> run_spec(const RunSpec& spec);

// Default tuning grids: C in {0, 0.25, ..., 2}, RL in {5, 10, 25, 50},
// budgets {250, 500, 1000, 10000}.
std::vector<double> default_c_grid();
std::vector<int> default_rl_grid();
std::vector<std::int64_t> default_budgets();

struct SweepGrid {
  std::vector<std::string> games;
  std::vector<std::int64_t> budgets = default_budgets();
  std::vector<AgentKind> agents{kAllAgents.begin(), kAllAgents.end()};
  std::vector<double> c_values = default_c_grid();
  std::vector<int> rl_values = default_rl_grid();
  double q = kDefaultQ;
  int repetitions = 40;
  std::uint64_t seed = 0;
  int threads = 1;
  bool timing = false;
};

// Cartesian product games x budgets x agents x C x RL, one RunSpec each, with
// the spec seed derived from the master seed and the spec's position.
std::vector<RunSpec> expand_grid(const SweepGrid& grid);

// Runs every repetition of every spec of the grid. Records arrive at `sink` in
// grid order (spec, then episode) regardless of thread count, so output is
// reproducible. A failing episode becomes a record with `error` set.
std::vector<RunRecord> run_matrix(
    const SweepGrid& grid,
    const std::function<void(const RunRecord&)>& sink = nullptr);

}  // namespace omcts::bench
