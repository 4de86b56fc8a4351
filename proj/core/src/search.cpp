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

#include "omcts/search.hpp"

#include <limits>
#include <utility>
#include <variant>

#include "omcts/errors.hpp"
#include "omcts/games/reward_map.hpp"

namespace omcts {
namespace {

constexpr std::uint64_t kTreeStream = 1;
constexpr std::uint64_t kSimulationStream = 2;

ActionId recommend(const TreeNode& root, const SearchConfig& config,
                   RandomSource& rng, std::vector<ActionSummary>& summary) {
  std::vector<ActionId> best;
  std::int64_t best_visits = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  // Borda scores need every root action sampled; a tiny budget may not get
  // that far, in which case visits alone decide.
  bool valued = true;
  if (std::holds_alternative<BordaEstimator>(config.estimator)) {
    for (const TreeNode::Edge& e : root.edges()) valued = valued && e.visits > 0;
  }
  for (const TreeNode::Edge& e : root.edges()) {
    ActionSummary s{e.action, e.visits, std::nullopt};
    if (valued && e.visits > 0) s.value = node_value(root, e.action, config.estimator);
    summary.push_back(s);

    const double value = s.value.value_or(-std::numeric_limits<double>::infinity());
    bool better = false;
    bool equal = false;
    if (config.recommendation == Recommendation::kMaxVisits) {
      better = e.visits > best_visits ||
               (e.visits == best_visits && value > best_value);
      equal = e.visits == best_visits && value == best_value;
    } else {
      better = value > best_value ||
               (value == best_value && e.visits > best_visits);
      equal = value == best_value && e.visits == best_visits;
    }
    if (better) {
      best.clear();
      best_visits = e.visits;
      best_value = value;
    }
    if (better || equal) best.push_back(e.action);
  }
  if (best.size() == 1) return best.front();
  return best[rng.uniform_index(best.size())];
}

}  // namespace

void validate(const SearchConfig& config) {
  if (!std::isfinite(config.exploration) || config.exploration < 0.0) {
    throw ConfigError("exploration constant must be finite and >= 0");
  }
  if (config.rollout_length < 1) throw ConfigError("rollout length must be >= 1");
  if (config.budget < 1) throw ConfigError("budget must be >= 1");
  if (config.subtree_depth < 0) throw ConfigError("subtree depth must be >= 0");
  if (const auto* mm = std::get_if<MixMaxEstimator>(&config.estimator)) {
    if (!(mm->q >= 0.0 && mm->q <= 1.0)) {
      throw ConfigError("MixMax Q must lie in [0, 1]");
    }
  }
}

RolloutResult rollout(MeteredModel& model, const State& state, int rollout_length,
                      RandomSource& rng) {
  if (rollout_length < 1) throw ConfigError("rollout length must be >= 1");
  const Environment& env = model.environment();
  std::unique_ptr<State> current = state.clone();
  int steps = 0;
  bool exhausted = false;
  while (steps < rollout_length && !env.is_terminal(*current)) {
    const auto actions = env.legal_actions(*current);
    const ActionId a = actions[rng.uniform_index(actions.size())];
    try {
      current = model.step(*current, a, rng);
    } catch (const BudgetExhausted&) {
      exhausted = true;
      break;
    }
    ++steps;
  }
  return {env.outcome(*current), steps, exhausted};
}

void backpropagate(std::span<const PathStep> path, const Outcome& outcome,
                   const ScoreBounds& bounds) {
  std::optional<double> reward;
  for (const PathStep& step : path) {
    if (!step.node->ordinal() && !reward) {
      reward = games::reward_map(outcome, bounds);
    }
    step.node->record(step.edge, outcome, reward.value_or(0.0));
  }
}

SearchResult run_search(MeteredModel& model, const State& root_state,
                        const SearchConfig& config) {
  validate(config);
  const Environment& env = model.environment();
  if (env.is_terminal(root_state)) {
    throw InvalidState("search started from a terminal state");
  }
  const std::int64_t calls_at_start = model.calls_used();
  RandomSource master(config.seed);
  RandomSource tree_rng = master.derive(kTreeStream);
  RandomSource sim_rng = master.derive(kSimulationStream);
  const ScoreBounds bounds = env.score_bounds();

  TreeNode root(is_ordinal(config.estimator));
  root.initialize(env.legal_actions(root_state), tree_rng);

  SearchResult result;
  if (root.edges().size() == 1) {
    result.action = root.edge(0).action;
    result.root.push_back({result.action, 0, std::nullopt});
    result.tree_nodes = 1;
    return result;
  }

  std::vector<PathStep> path;
  bool out_of_budget = false;
  while (!out_of_budget) {
    path.clear();
    std::unique_ptr<State> state = root_state.clone();
    TreeNode* node = &root;
    std::optional<Outcome> outcome;
    try {
      for (;;) {
        if (env.is_terminal(*state)) {
          outcome = env.outcome(*state);
          break;
        }
        if (!node->initialized()) node->initialize(env.legal_actions(*state), tree_rng);
        if (node->has_untried()) {
          const std::size_t i = node->peek_untried();
          const ActionId a = node->edge(i).action;
          if (!env.is_legal(*state, a)) break;
          state = model.step(*state, a, sim_rng);
          node->pop_untried();
          if (config.record_trace) result.trace.push_back(a);
          path.push_back({node, i});
          node = &node->child(i);
          break;
        }
        const ActionId a = select_child(*node, config.exploration,
                                        config.estimator, tree_rng);
        // Stochastic action sets can disagree with the node's; stop the
        // descent and evaluate from here.
        if (!env.is_legal(*state, a)) break;
        const std::size_t i = node->edge_index(a);
        state = model.step(*state, a, sim_rng);
        if (config.record_trace) result.trace.push_back(a);
        path.push_back({node, i});
        node = &node->child(i);
      }
    } catch (const BudgetExhausted&) {
      // Incomplete descent: drop the iteration.
      break;
    }
    if (!outcome) {
      const RolloutResult r =
          rollout(model, *state, config.rollout_length, sim_rng);
      outcome = r.outcome;
      out_of_budget = r.budget_exhausted;
    }
    if (path.empty()) continue;
    backpropagate(path, *outcome, bounds);
    ++result.iterations;
  }

  result.action = recommend(root, config, tree_rng, result.root);
  result.calls_used = model.calls_used() - calls_at_start;
  result.tree_nodes = root.subtree_size();
  return result;
}

}  // namespace omcts
