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

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "omcts/environment.hpp"
#include "omcts/estimator.hpp"
#include "omcts/metered_model.hpp"
#include "omcts/tree_node.hpp"

namespace omcts {

enum class Recommendation { kMaxVisits, kMaxValue };

struct SearchConfig {
  Estimator estimator = AverageEstimator{};
  double exploration = 1.0 / std::sqrt(2.0);
  int rollout_length = 10;
  std::int64_t budget = 1000;
  std::uint64_t seed = 0;
  Recommendation recommendation = Recommendation::kMaxVisits;
  // Binary-subtree depth (node levels) for the preference-based search;
  // 0 picks ceil(log2(budget / rollout_length)) clamped to [2, 4].
  int subtree_depth = 0;
  // Keep every in-tree action choice in SearchResult::trace.
  bool record_trace = false;
};

// Throws ConfigError for non-finite or out-of-range fields.
void validate(const SearchConfig& config);

struct ActionSummary {
  ActionId action = 0;
  std::int64_t visits = 0;
  std::optional<double> value;
};

struct SearchResult {
  ActionId action = 0;
  std::vector<ActionSummary> root;
  std::int64_t iterations = 0;
  std::int64_t calls_used = 0;
  std::size_t tree_nodes = 0;
  std::vector<ActionId> trace;
};

struct RolloutResult {
  Outcome outcome;
  int steps = 0;
  bool budget_exhausted = false;
};

// Plays uniformly random legal actions from `state` until a terminal state or
// `rollout_length` steps, and evaluates the state reached. Running out of
// budget ends the rollout early; the state reached so far is still evaluated
// and the result is flagged.
RolloutResult rollout(MeteredModel& model, const State& state, int rollout_length,
                      RandomSource& rng);

struct PathStep {
  TreeNode* node = nullptr;
  std::size_t edge = 0;
};

// Adds `outcome` to every (node, action) on the path. Numeric nodes receive the
// outcome mapped into [0, 1] with the given score bounds.
void backpropagate(std::span<const PathStep> path, const Outcome& outcome,
                   const ScoreBounds& bounds);

// Open-loop UCT search from `root_state` until the model's budget is spent.
//
// Each iteration re-simulates from the root: descend by select_child while the
// node is fully expanded, expand one untried action (random order fixed at
// node creation), roll out, back up. An iteration cut short by the budget
// before its expansion step is dropped. A root with a single legal action is
// answered without search.
SearchResult run_search(MeteredModel& model, const State& root_state,
                        const SearchConfig& config);

}  // namespace omcts
