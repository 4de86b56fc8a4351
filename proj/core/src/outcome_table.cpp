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

#include "omcts/outcome_table.hpp"

#include <algorithm>
#include <string>

#include "omcts/errors.hpp"

namespace omcts {

std::size_t OutcomeTable::Column::lower(const Outcome& o) const {
  return static_cast<std::size_t>(
      std::lower_bound(values.begin(), values.end(), o) - values.begin());
}

void OutcomeTable::Column::add(const Outcome& o) {
  const std::size_t i = lower(o);
  if (i == values.size() || values[i] != o) {
    values.insert(values.begin() + static_cast<std::ptrdiff_t>(i), o);
    counts.insert(counts.begin() + static_cast<std::ptrdiff_t>(i), 0);
    below.insert(below.begin() + static_cast<std::ptrdiff_t>(i),
                 i == 0 ? 0 : below[i - 1] + counts[i - 1]);
  }
  ++counts[i];
  for (std::size_t j = i + 1; j < below.size(); ++j) ++below[j];
  ++n;
}

std::int64_t OutcomeTable::Column::doubled_beaten_by(const Outcome& o) const {
  const std::size_t i = lower(o);
  const std::int64_t worse = i < values.size() ? below[i] : n;
  const std::int64_t tied = (i < values.size() && values[i] == o) ? counts[i] : 0;
  return 2 * worse + tied;
}

OutcomeTable::OutcomeTable(std::vector<ActionId> actions)
    : actions_(std::move(actions)),
      columns_(actions_.size()),
      wins2_(actions_.size() * actions_.size(), 0) {
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    for (std::size_t j = i + 1; j < actions_.size(); ++j) {
      if (actions_[i] == actions_[j]) {
        throw UnknownAction("duplicate action " + std::to_string(actions_[i]));
      }
    }
  }
}

std::size_t OutcomeTable::index_of(ActionId action) const {
  const auto it = std::find(actions_.begin(), actions_.end(), action);
  if (it == actions_.end()) {
    throw UnknownAction("action " + std::to_string(action) +
                        " is not registered in this table");
  }
  return static_cast<std::size_t>(it - actions_.begin());
}

const OutcomeTable::Column& OutcomeTable::sampled_column(ActionId action) const {
  const Column& col = columns_[index_of(action)];
  if (col.n == 0) {
    throw NoSamples("action " + std::to_string(action) + " has no samples");
  }
  return col;
}

void OutcomeTable::record(ActionId action, const Outcome& outcome) {
  const std::size_t a = index_of(action);
  Column& col = columns_[a];
  col.add(outcome);
  ++total_;
  // P(a > b) <- alpha P(a > b) + (1 - alpha) P(b loses to o), alpha = n(a)/(n(a)+1),
  // carried out on the numerators 2 n(a) n(b) P(a > b).
  for (std::size_t b = 0; b < actions_.size(); ++b) {
    if (b == a || columns_[b].n == 0) continue;
    wins2(a, b) += columns_[b].doubled_beaten_by(outcome);
    wins2(b, a) = 2 * col.n * columns_[b].n - wins2(a, b);
  }
}

double OutcomeTable::pref(std::size_t a, std::size_t b) const {
  const std::int64_t pairs = 2 * columns_[a].n * columns_[b].n;
  return static_cast<double>(wins2_[a * actions_.size() + b]) / static_cast<double>(pairs);
}

double OutcomeTable::prob_of(const Outcome& o, ActionId action) const {
  return static_cast<double>(count(o, action)) /
         static_cast<double>(sampled_column(action).n);
}

double OutcomeTable::prob_below(const Outcome& o, ActionId action) const {
  return static_cast<double>(count_below(o, action)) /
         static_cast<double>(sampled_column(action).n);
}

double OutcomeTable::pref_prob(ActionId a, ActionId b) const {
  const std::size_t ia = index_of(a);
  const std::size_t ib = index_of(b);
  if (ia == ib) throw SameAction("preference of an action against itself");
  sampled_column(a);
  sampled_column(b);
  return pref(ia, ib);
}

double OutcomeTable::borda_score(ActionId action) const {
  const std::size_t ia = index_of(action);
  for (const ActionId b : actions_) sampled_column(b);
  if (actions_.size() == 1) return 1.0;
  std::vector<double> terms;
  terms.reserve(actions_.size() - 1);
  for (std::size_t b = 0; b < actions_.size(); ++b) {
    if (b != ia) terms.push_back(pref(ia, b));
  }
  // Fixed summation order: equal term sets give equal scores.
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (const double t : terms) sum += t;
  return sum / static_cast<double>(actions_.size() - 1);
}

std::int64_t OutcomeTable::count(const Outcome& o, ActionId action) const {
  const Column& col = columns_[index_of(action)];
  const std::size_t i = col.lower(o);
  return (i < col.values.size() && col.values[i] == o) ? col.counts[i] : 0;
}

std::int64_t OutcomeTable::count_below(const Outcome& o, ActionId action) const {
  const Column& col = columns_[index_of(action)];
  const std::size_t i = col.lower(o);
  return i < col.values.size() ? col.below[i] : col.n;
}

std::int64_t OutcomeTable::visits(ActionId action) const {
  return columns_[index_of(action)].n;
}

std::size_t OutcomeTable::distinct_outcomes(ActionId action) const {
  return columns_[index_of(action)].values.size();
}

}  // namespace omcts
