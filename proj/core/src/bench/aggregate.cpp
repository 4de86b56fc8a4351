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

#include "omcts/bench/aggregate.hpp"

#include <set>
#include <sstream>

#include "omcts/errors.hpp"

namespace omcts::bench {
namespace {

int compare(const Performance& a, const Performance& b) {
  if (a.win_rate != b.win_rate) return a.win_rate > b.win_rate ? 1 : -1;
  if (a.mean_score != b.mean_score) return a.mean_score > b.mean_score ? 1 : -1;
  return 0;
}

}  // namespace

std::map<ConfigKey, CellStats> aggregate(std::span<const RunRecord> records) {
  std::map<ConfigKey, CellStats> cells;
  std::map<ConfigKey, double> score_sums;
  for (const RunRecord& r : records) {
    ConfigKey key{r.game, r.budget, r.agent, r.c, r.rl, r.q};
    CellStats& cell = cells[key];
    if (r.failed()) continue;
    ++cell.episodes;
    if (r.win) ++cell.wins;
    score_sums[key] += r.score;
  }
  for (auto& [key, cell] : cells) {
    if (cell.episodes == 0) {
      throw EmptyCell("no completed episodes for " + config_label(key) + " on " +
                      key.game + " @" + std::to_string(key.budget));
    }
    cell.win_rate = static_cast<double>(cell.wins) / cell.episodes;
    cell.mean_score = score_sums[key] / cell.episodes;
  }
  return cells;
}

std::string config_label(const ConfigKey& key) {
  std::ostringstream out;
  out << key.agent << " C=" << key.c << " RL=" << key.rl;
  if (key.q) out << " Q=" << *key.q;
  return out.str();
}

ProblemTable best_per_agent(const std::map<ConfigKey, CellStats>& cells) {
  ProblemTable table;
  for (const auto& [key, cell] : cells) {
    const Performance perf{cell.win_rate, cell.mean_score};
    auto& row = table[Problem{key.game, key.budget}];
    const auto it = row.find(key.agent);
    if (it == row.end() || compare(perf, it->second) > 0) row[key.agent] = perf;
  }
  return table;
}

ProblemTable per_configuration(const std::map<ConfigKey, CellStats>& cells) {
  ProblemTable table;
  for (const auto& [key, cell] : cells) {
    table[Problem{key.game, key.budget}][config_label(key)] =
        Performance{cell.win_rate, cell.mean_score};
  }
  return table;
}

RankTable rank_algorithms(const ProblemTable& table) {
  if (table.empty()) throw EmptyCell("nothing to rank");
  RankTable out;
  std::set<std::string> names;
  for (const auto& [problem, row] : table) {
    for (const auto& [name, perf] : row) names.insert(name);
  }
  out.algorithms.assign(names.begin(), names.end());
  const std::size_t k = out.algorithms.size();
  out.average_rank.assign(k, 0.0);

  for (const auto& [problem, row] : table) {
    std::vector<Performance> perf;
    for (const auto& name : out.algorithms) {
      const auto it = row.find(name);
      if (it == row.end()) {
        throw EmptyCell(name + " has no result on " + problem.game + " @" +
                        std::to_string(problem.budget));
      }
      perf.push_back(it->second);
    }
    std::vector<double> ranks(k, 1.0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const int c = compare(perf[j], perf[i]);
        if (c > 0) ranks[i] += 1.0;
        if (c == 0) ranks[i] += 0.5;
      }
      out.average_rank[i] += ranks[i];
    }
    out.problems.push_back(problem);
    out.ranks.push_back(std::move(ranks));
    out.performance.push_back(std::move(perf));
  }
  for (double& r : out.average_rank) r /= static_cast<double>(out.problems.size());
  return out;
}

}  // namespace omcts::bench
