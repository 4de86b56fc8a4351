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

#include "omcts/pb_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>

#include "omcts/errors.hpp"

namespace omcts {

DuelStats::DuelStats(std::size_t actions) : n_(actions), w_(actions * actions, 0.0) {}

void DuelStats::record(std::size_t i, std::size_t j, double score_i) {
  if (i >= n_ || j >= n_ || i == j) throw UnknownAction("bad duel indices");
  w_[i * n_ + j] += score_i;
  w_[j * n_ + i] += 1.0 - score_i;
  total_ += 1.0;
}

std::optional<double> DuelStats::row_win_rate(std::size_t i) const {
  double sum = 0.0;
  int opponents = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (j == i) continue;
    const double n = comparisons(i, j);
    if (n > 0.0) {
      sum += wins(i, j) / n;
      ++opponents;
    }
  }
  if (opponents == 0) return std::nullopt;
  return sum / opponents;
}

double rucb_bound(const DuelStats& duels, std::size_t i, std::size_t j, double c) {
  if (i == j) return 0.5;
  const double n = duels.comparisons(i, j);
  if (n == 0.0) return std::numeric_limits<double>::infinity();
  const double t = duels.total_comparisons() + 1.0;
  return duels.wins(i, j) / n + c * std::sqrt(std::log(t) / n);
}

std::pair<ActionId, ActionId> rucb_select_pair(const DuelStats& duels,
                                               std::span<const ActionId> actions,
                                               double c, RandomSource& rng) {
  const std::size_t k = actions.size();
  if (k < 2) throw TooFewActions("a duel needs at least two actions");
  if (duels.size() != k) throw InvalidState("duel table does not match actions");

  std::vector<std::size_t> champions;
  int best_count = -1;
  double best_sum = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    int count = 0;
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const double u = rucb_bound(duels, i, j, c);
      if (u >= 0.5) ++count;
      sum += u;
    }
    if (count > best_count || (count == best_count && sum > best_sum)) {
      champions.clear();
      best_count = count;
      best_sum = sum;
    }
    if (count == best_count && sum == best_sum) champions.push_back(i);
  }
  const std::size_t champ = champions[rng.uniform_index(champions.size())];

  std::vector<std::size_t> challengers;
  double best_u = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < k; ++j) {
    if (j == champ) continue;
    const double u = rucb_bound(duels, j, champ, c);
    if (u > best_u) {
      challengers.clear();
      best_u = u;
    }
    if (u == best_u) challengers.push_back(j);
  }
  const std::size_t challenger = challengers[rng.uniform_index(challengers.size())];
  return {actions[champ], actions[challenger]};
}

int default_subtree_depth(std::int64_t budget, int rollout_length) {
  const double ratio = static_cast<double>(budget) /
                       static_cast<double>(std::max(rollout_length, 1));
  const int depth = ratio > 1.0 ? static_cast<int>(std::ceil(std::log2(ratio))) : 0;
  return std::clamp(depth, 2, 4);
}

namespace {

struct PbNode {
  bool initialized = false;
  std::vector<ActionId> actions;
  DuelStats duels;
  std::vector<std::unique_ptr<PbNode>> children;

  void initialize(std::vector<ActionId> a) {
    actions = std::move(a);
    duels = DuelStats(actions.size());
    children.resize(actions.size());
    initialized = true;
  }

  std::size_t index_of(ActionId a) const {
    return static_cast<std::size_t>(
        std::find(actions.begin(), actions.end(), a) - actions.begin());
  }

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& c : children) {
      if (c) n += c->size();
    }
    return n;
  }
};

class PbSearch {
 public:
  PbSearch(MeteredModel& model, const SearchConfig& config, int depth)
      : model_(model),
        env_(model.environment()),
        config_(config),
        depth_(depth),
        tree_rng_(RandomSource(config.seed).derive(1)),
        sim_rng_(RandomSource(config.seed).derive(2)) {}

  // Returns the outcomes of every trajectory in the subtree under `node`.
  std::vector<Outcome> explore(PbNode& node, const State& state, int levels,
                               bool fresh) {
    if (env_.is_terminal(state)) return {env_.outcome(state)};
    if (fresh || levels <= 1) {
      ++rollouts_;
      const RolloutResult r =
          rollout(model_, state, config_.rollout_length, sim_rng_);
      if (r.budget_exhausted) throw BudgetExhausted();
      return {r.outcome};
    }
    if (!node.initialized) node.initialize(env_.legal_actions(state));
    ++selections_;

    if (node.actions.size() == 1) {
      return descend(node, state, 0, levels);
    }
    const auto [a, b] =
        rucb_select_pair(node.duels, node.actions, config_.exploration, tree_rng_);
    const std::size_t ia = node.index_of(a);
    const std::size_t ib = node.index_of(b);
    std::vector<Outcome> left = descend(node, state, ia, levels);
    std::vector<Outcome> right = descend(node, state, ib, levels);
    for (const Outcome& x : left) {
      for (const Outcome& y : right) {
        const auto order = compare_outcomes(x, y);
        node.duels.record(ia, ib, order > 0 ? 1.0 : order < 0 ? 0.0 : 0.5);
        ++comparisons_;
      }
    }
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }

  std::vector<Outcome> descend(PbNode& node, const State& state, std::size_t i,
                               int levels) {
    const ActionId a = node.actions[i];
    if (!env_.is_legal(state, a)) {
      // The re-sampled state disagrees with the node's action set.
      ++rollouts_;
      const RolloutResult r = rollout(model_, state, config_.rollout_length, sim_rng_);
      if (r.budget_exhausted) throw BudgetExhausted();
      return {r.outcome};
    }
    if (config_.record_trace) trace_.push_back(a);
    auto next = model_.step(state, a, sim_rng_);
    bool fresh = false;
    if (!node.children[i]) {
      node.children[i] = std::make_unique<PbNode>();
      fresh = true;
    }
    return explore(*node.children[i], *next, levels - 1, fresh);
  }

  SearchResult run(const State& root_state, PbSearchStats* stats) {
    SearchResult result;
    PbNode root;
    root.initialize(env_.legal_actions(root_state));
    if (stats) stats->subtree_depth = depth_;
    if (root.actions.size() == 1) {
      result.action = root.actions.front();
      result.root.push_back({result.action, 0, std::nullopt});
      result.tree_nodes = 1;
      return result;
    }
    const std::int64_t calls_at_start = model_.calls_used();
    for (;;) {
      rollouts_ = 0;
      selections_ = 0;
      try {
        explore(root, root_state, depth_, false);
      } catch (const BudgetExhausted&) {
        break;
      }
      ++result.iterations;
      if (stats) {
        stats->rollouts_per_iteration.push_back(rollouts_);
        stats->selections_per_iteration.push_back(selections_);
      }
    }
    if (stats) stats->comparisons = comparisons_;

    std::vector<std::size_t> best;
    double best_rate = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < root.actions.size(); ++i) {
      double duels = 0.0;
      for (std::size_t j = 0; j < root.actions.size(); ++j) {
        if (j != i) duels += root.duels.comparisons(i, j);
      }
      const auto rate = root.duels.row_win_rate(i);
      result.root.push_back({root.actions[i], static_cast<std::int64_t>(duels), rate});
      const double r = rate.value_or(-1.0);
      if (r > best_rate) {
        best.clear();
        best_rate = r;
      }
      if (r == best_rate) best.push_back(i);
    }
    result.action = root.actions[best[tree_rng_.uniform_index(best.size())]];
    result.calls_used = model_.calls_used() - calls_at_start;
    result.tree_nodes = root.size();
    result.trace = std::move(trace_);
    return result;
  }

 private:
  MeteredModel& model_;
  const Environment& env_;
  const SearchConfig& config_;
  int depth_;
  RandomSource tree_rng_;
  RandomSource sim_rng_;
  int rollouts_ = 0;
  int selections_ = 0;
  std::int64_t comparisons_ = 0;
  std::vector<ActionId> trace_;
};

}  // namespace

SearchResult run_search_pb(MeteredModel& model, const State& root_state,
                           const SearchConfig& config, PbSearchStats* stats) {
  validate(config);
  if (model.environment().is_terminal(root_state)) {
    throw InvalidState("search started from a terminal state");
  }
  const int depth = config.subtree_depth > 0
                        ? config.subtree_depth
                        : default_subtree_depth(model.budget(), config.rollout_length);
  if (depth < 2) throw ConfigError("subtree depth must be >= 2");
  PbSearch search(model, config, depth);
  return search.run(root_state, stats);
}

}  // namespace omcts
