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
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "omcts/environment.hpp"
#include "omcts/estimator.hpp"
#include "omcts/outcome_table.hpp"

namespace omcts {

// Node of an open-loop search tree. A node stands for an action sequence from
// the root; its state is re-sampled through the forward model on every visit,
// so the node itself only keeps statistics.
//
// Visits are counted per action: visits() == sum of edge visits. In ordinal
// mode the node keeps an OutcomeTable whose per-action totals equal the edge
// visit counts; numeric statistics are kept otherwise.
class TreeNode {
 public:
  struct Edge {
    ActionId action = 0;
    std::int64_t visits = 0;
    double reward_sum = 0.0;
    double reward_max = -std::numeric_limits<double>::infinity();
    std::unique_ptr<TreeNode> child;
  };

  explicit TreeNode(bool ordinal);

  bool initialized() const noexcept { return initialized_; }
  // Registers the node's actions; the expansion order is a random permutation
  // drawn here.
  void initialize(std::vector<ActionId> actions, RandomSource& rng);

  bool has_untried() const noexcept { return next_untried_ < order_.size(); }
  // Edge index of the next action to expand, without consuming it.
  std::size_t peek_untried() const { return order_.at(next_untried_); }
  std::size_t pop_untried() { return order_.at(next_untried_++); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::size_t edge_index(ActionId action) const;  // throws UnknownAction

  // Child for edge i, created on first request.
  TreeNode& child(std::size_t i);
  const TreeNode* child_if_present(std::size_t i) const {
    return edges_.at(i).child.get();
  }

  // Adds one sample for edge i. `reward` is only used in numeric mode.
  void record(std::size_t i, const Outcome& outcome, double reward);

  std::int64_t visits() const noexcept { return visits_; }
  double reward_min() const noexcept { return reward_min_; }
  double reward_max() const noexcept { return reward_max_; }
  bool ordinal() const noexcept { return table_.has_value(); }
  const OutcomeTable& outcome_table() const;

  // Number of nodes in this subtree, this one included.
  std::size_t subtree_size() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> order_;
  std::size_t next_untried_ = 0;
  std::int64_t visits_ = 0;
  double reward_min_ = std::numeric_limits<double>::infinity();
  double reward_max_ = -std::numeric_limits<double>::infinity();
  std::optional<OutcomeTable> table_;
  bool ordinal_;
  bool initialized_ = false;
};

// Value estimate of `action` at `node`. Throws NoSamples for an unvisited
// action and InvalidState when the node's mode does not match the estimator.
double node_value(const TreeNode& node, ActionId action, const Estimator& estimator);

// The UCB exploration bonus 2C * sqrt(2 ln n / n(a)).
double exploration_bonus(double c, std::int64_t parent_visits,
                         std::int64_t action_visits);

// UCT selection: argmax of node_value + exploration_bonus, ties broken
// uniformly at random. Unvisited actions are returned before any scoring.
ActionId select_child(const TreeNode& node, double c, const Estimator& estimator,
                      RandomSource& rng);

}  // namespace omcts
