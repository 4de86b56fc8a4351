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

#include "omcts/metered_model.hpp"

#include <string>

#include "omcts/errors.hpp"

namespace omcts {

MeteredModel::MeteredModel(const Environment& env, std::int64_t budget)
    : env_(env), budget_(budget) {
  if (budget < 0) throw ConfigError("budget must be nonnegative");
}

std::unique_ptr<State> MeteredModel::step(const State& state, ActionId action,
                                          RandomSource& rng) {
  if (env_.is_terminal(state)) {
    throw InvalidState("step called on a terminal state");
  }
  if (!env_.is_legal(state, action)) {
    throw IllegalAction("action " + std::to_string(action) +
                        " is not available in this state");
  }
  if (calls_used_ >= budget_) throw BudgetExhausted();
  ++calls_used_;
  return env_.transition(state, action, rng);
}

}  // namespace omcts
