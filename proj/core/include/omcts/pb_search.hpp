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

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "omcts/environment.hpp"
#include "omcts/metered_model.hpp"
#include "omcts/search.hpp"

namespace omcts {

// Pairwise duel record of the actions at one node. wins(i, j) counts duels in
// which action i's trajectory beat action j's; a tie adds one half to both.
class DuelStats {
 public:
  explicit DuelStats(std::size_t actions = 0);

  std::size_t size() const noexcept { return n_; }
  // score_i is 1 (i won), 0.5 (tie) or 0 (j won).
  void record(std::size_t i, std::size_t j, double score_i);
  double wins(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  double comparisons(std::size_t i, std::size_t j) const {
    return wins(i, j) + wins(j, i);
  }
  double total_comparisons() const noexcept { return total_; }
  // Mean of wins(i, j) / comparisons(i, j) over opponents with at least one
  // duel; nullopt if i never dueled.
  std::optional<double> row_win_rate(std::size_t i) const;

 private:
  std::size_t n_;
  std::vector<double> w_;
  double total_ = 0.0;
};

// Optimistic pairwise bound u(i, j) = W/N + c * sqrt(ln t / N) with
// t = total comparisons + 1; +inf when the pair never dueled.
double rucb_bound(const DuelStats& duels, std::size_t i, std::size_t j, double c);

// RUCB-style pair choice. The champion is the action with the most optimistic
// wins (u >= 1/2), ties broken by the sum of its bounds and then at random; the
// challenger is the action with the highest bound against the champion.
// `actions` names the rows of `duels`. Throws TooFewActions for fewer than two
// actions and InvalidState when sizes disagree.
std::pair<ActionId, ActionId> rucb_select_pair(const DuelStats& duels,
                                               std::span<const ActionId> actions,
                                               double c, RandomSource& rng);

// Per-iteration bookkeeping of run_search_pb, for audits and tests.
struct PbSearchStats {
  int subtree_depth = 0;
  std::vector<int> rollouts_per_iteration;
  std::vector<int> selections_per_iteration;
  std::int64_t comparisons = 0;
};

int default_subtree_depth(std::int64_t budget, int rollout_length);

// Preference-based MCTS. Each iteration selects a binary subtree from the root:
// every visited node picks two actions with rucb_select_pair, recursing until
// a node new to the tree, a terminal state, or the depth cap is reached, where
// a rollout evaluates the trajectory. On the way back every trajectory below
// one selected action is compared with every trajectory below the other, and
// the results are stored in that node's duels. The root action with the best
// row win rate is recommended.
SearchResult run_search_pb(MeteredModel& model, const State& root_state,
                           const SearchConfig& config,
                           PbSearchStats* stats = nullptr);

}  // namespace omcts
