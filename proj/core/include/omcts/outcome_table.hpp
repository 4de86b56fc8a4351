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
#include <vector>

#include "omcts/environment.hpp"
#include "omcts/outcome.hpp"

namespace omcts {

// Per-node counts of observed ordinal outcomes for each action, together with
// the pairwise preference matrix P(a > b) that the Borda score is built from.
//
// Outcome sets are open-ended, so counts are kept sparsely: for every action a
// sorted list of distinct outcomes with a running "count strictly below"
// prefix. The preference matrix is maintained incrementally on every record;
// it is kept as exact integer numerators (twice the number of won sample
// pairs, ties counting one) so that equal observations give bitwise-equal
// probabilities.
// P(b > a) is kept at 1 - P(a > b) since ties contribute half to each side.
class OutcomeTable {
 public:
  // Actions must be distinct. An empty action list is allowed (terminal nodes).
  explicit OutcomeTable(std::vector<ActionId> actions);

  // Throws UnknownAction.
  void record(ActionId action, const Outcome& outcome);

  // P(o | a). Throws NoSamples when the action has no samples.
  double prob_of(const Outcome& o, ActionId action) const;
  // P(outcome strictly worse than o | a). Throws NoSamples.
  double prob_below(const Outcome& o, ActionId action) const;
  // P(a beats b) with ties counted half. Throws NoSamples or SameAction.
  double pref_prob(ActionId a, ActionId b) const;
  // Mean of pref_prob(a, b) over all other actions b. Every action needs at
  // least one sample. A table with a single action scores it 1.
  double borda_score(ActionId action) const;

  std::int64_t count(const Outcome& o, ActionId action) const;
  std::int64_t count_below(const Outcome& o, ActionId action) const;
  std::int64_t visits(ActionId action) const;
  std::int64_t total() const noexcept { return total_; }
  std::size_t distinct_outcomes(ActionId action) const;

  std::span<const ActionId> actions() const noexcept { return actions_; }
  std::size_t index_of(ActionId action) const;

 private:
  struct Column {
    std::vector<Outcome> values;     // sorted, distinct
    std::vector<std::int64_t> counts;
    std::vector<std::int64_t> below;  // below[i] = sum of counts[0..i)
    std::int64_t n = 0;

    // Index of the first value >= o.
    std::size_t lower(const Outcome& o) const;
    void add(const Outcome& o);
    // Twice the number of draws in this column that lose to o, plus ties.
    std::int64_t doubled_beaten_by(const Outcome& o) const;
  };

  const Column& sampled_column(ActionId action) const;
  std::int64_t& wins2(std::size_t a, std::size_t b) {
    return wins2_[a * actions_.size() + b];
  }
  double pref(std::size_t a, std::size_t b) const;

  std::vector<ActionId> actions_;
  std::vector<Column> columns_;
  std::vector<std::int64_t> wins2_;
  std::int64_t total_ = 0;
};

}  // namespace omcts
