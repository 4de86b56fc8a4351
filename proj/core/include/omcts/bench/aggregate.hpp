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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omcts/bench/runner.hpp"

namespace omcts::bench {

// One agent configuration on one problem (game x budget).
struct ConfigKey {
  std::string game;
  std::int64_t budget = 0;
  std::string agent;
  double c = 0.0;
  int rl = 0;
  std::optional<double> q;

  auto operator<=>(const ConfigKey&) const = default;
};

struct CellStats {
  int episodes = 0;
  int wins = 0;
  double win_rate = 0.0;
  double mean_score = 0.0;
};

// Win rate and mean score per configuration. Failed records are skipped; a
// configuration whose records all failed raises EmptyCell.
std::map<ConfigKey, CellStats> aggregate(std::span<const RunRecord> records);

struct Problem {
  std::string game;
  std::int64_t budget = 0;
  auto operator<=>(const Problem&) const = default;
};

// The objective is lexicographic: win rate first, then mean score.
struct Performance {
  double win_rate = 0.0;
  double mean_score = 0.0;
};

using ProblemTable = std::map<Problem, std::map<std::string, Performance>>;

// Each agent tuned per problem: its best configuration under the
// (win rate, mean score) order.
ProblemTable best_per_agent(const std::map<ConfigKey, CellStats>& cells);

// Every configuration as its own contestant, labelled e.g. "O-MCTS C=1.25 RL=5".
ProblemTable per_configuration(const std::map<ConfigKey, CellStats>& cells);

std::string config_label(const ConfigKey& key);

struct RankTable {
  std::vector<Problem> problems;
  std::vector<std::string> algorithms;
  // ranks[p][a]: rank of algorithm a on problem p, 1 = best, ties get midranks.
  std::vector<std::vector<double>> ranks;
  std::vector<std::vector<Performance>> performance;
  std::vector<double> average_rank;
};

// Ranks algorithms within every problem and averages over problems. Every
// algorithm must appear in every problem (EmptyCell otherwise).
RankTable rank_algorithms(const ProblemTable& table);

}  // namespace omcts::bench
