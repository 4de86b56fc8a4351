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

#include "omcts/tree_node.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>

#include "omcts/errors.hpp"

namespace omcts {

std::string to_string(const Estimator& e) {
  return std::visit(
      [](const auto& est) -> std::string {
        using T = std::decay_t<decltype(est)>;
        if constexpr (std::is_same_v<T, AverageEstimator>) {
          return "average";
        } else if constexpr (std::is_same_v<T, MixMaxEstimator>) {
          return "mixmax(q=" + std::to_string(est.q) + ")";
        } else if constexpr (std::is_same_v<T, NodeNormalizedEstimator>) {
          return "node-normalized";
        } else {
          return "borda";
        }
      },
      e);
}

TreeNode::TreeNode(bool ordinal) : ordinal_(ordinal) {}

void TreeNode::initialize(std::vector<ActionId> actions, RandomSource& rng) {
  if (initialized_) throw InvalidState("tree node initialized twice");
  edges_.resize(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) edges_[i].action = actions[i];
  order_.resize(actions.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order_));
  if (ordinal_) table_.emplace(std::move(actions));
  initialized_ = true;
}

std::size_t TreeNode::edge_index(ActionId action) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].action == action) return i;
  }
  throw UnknownAction("action " + std::to_string(action) + " not in tree node");
}

TreeNode& TreeNode::child(std::size_t i) {
  Edge& e = edges_.at(i);
  if (!e.child) e.child = std::make_unique<TreeNode>(ordinal_);
  return *e.child;
}

void TreeNode::record(std::size_t i, const Outcome& outcome, double reward) {
  Edge& e = edges_.at(i);
  ++e.visits;
  ++visits_;
  if (table_) {
    table_->record(e.action, outcome);
    return;
  }
  e.reward_sum += reward;
  e.reward_max = std::max(e.reward_max, reward);
  reward_min_ = std::min(reward_min_, reward);
  reward_max_ = std::max(reward_max_, reward);
}

const OutcomeTable& TreeNode::outcome_table() const {
  if (!table_) throw InvalidState("tree node has no outcome table");
  return *table_;
}

std::size_t TreeNode::subtree_size() const {
  std::size_t n = 1;
  for (const Edge& e : edges_) {
    if (e.child) n += e.child->subtree_size();
  }
  return n;
}

double node_value(const TreeNode& node, ActionId action, const Estimator& estimator) {
  const TreeNode::Edge& e = node.edge(node.edge_index(action));
  if (e.visits == 0) {
    throw NoSamples("action " + std::to_string(action) + " has no samples");
  }
  if (is_ordinal(estimator) != node.ordinal()) {
    throw InvalidState("estimator does not match the tree node mode");
  }
  const double mean = e.reward_sum / static_cast<double>(e.visits);
  return std::visit(
      [&](const auto& est) -> double {
        using T = std::decay_t<decltype(est)>;
        if constexpr (std::is_same_v<T, AverageEstimator>) {
          return mean;
        } else if constexpr (std::is_same_v<T, MixMaxEstimator>) {
          return est.q * e.reward_max + (1.0 - est.q) * mean;
        } else if constexpr (std::is_same_v<T, NodeNormalizedEstimator>) {
          const double span = node.reward_max() - node.reward_min();
          if (!(span > 0.0)) return 0.5;
          return (mean - node.reward_min()) / span;
        } else {
          return node.outcome_table().borda_score(action);
        }
      },
      estimator);
}

double exploration_bonus(double c, std::int64_t parent_visits,
                         std::int64_t action_visits) {
  return 2.0 * c *
         std::sqrt(2.0 * std::log(static_cast<double>(parent_visits)) /
                   static_cast<double>(action_visits));
}

ActionId select_child(const TreeNode& node, double c, const Estimator& estimator,
                      RandomSource& rng) {
  const auto edges = node.edges();
  if (edges.empty()) throw InvalidState("select_child on a node without actions");
  for (const TreeNode::Edge& e : edges) {
    if (e.visits == 0) return e.action;
  }
  double best = -std::numeric_limits<double>::infinity();
  std::vector<ActionId> tied;
  for (const TreeNode::Edge& e : edges) {
    double score = node_value(node, e.action, estimator);
    if (c != 0.0) score += exploration_bonus(c, node.visits(), e.visits);
    if (score > best) {
      best = score;
      tied.clear();
    }
    if (score == best) tied.push_back(e.action);
  }
  if (tied.size() == 1) return tied.front();
  return tied[rng.uniform_index(tied.size())];
}

}  // namespace omcts
