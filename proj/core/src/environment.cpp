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

#include "omcts/environment.hpp"

#include <utility>

namespace omcts {

ScoreTransformedEnvironment::ScoreTransformedEnvironment(const Environment& inner,
                                                         Transform transform,
                                                         std::string label)
    : inner_(inner), transform_(std::move(transform)), label_(std::move(label)) {}

std::string ScoreTransformedEnvironment::name() const {
  return inner_.name() + "[" + label_ + "]";
}

std::unique_ptr<State> ScoreTransformedEnvironment::initial_state() const {
  return inner_.initial_state();
}

std::vector<ActionId> ScoreTransformedEnvironment::legal_actions(
    const State& state) const {
  return inner_.legal_actions(state);
}

std::unique_ptr<State> ScoreTransformedEnvironment::transition(
    const State& state, ActionId action, RandomSource& rng) const {
  return inner_.transition(state, action, rng);
}

bool ScoreTransformedEnvironment::is_terminal(const State& state) const {
  return inner_.is_terminal(state);
}

Outcome ScoreTransformedEnvironment::outcome(const State& state) const {
  const Outcome raw = inner_.outcome(state);
  return Outcome(raw.status(), transform_(raw.score()));
}

ScoreBounds ScoreTransformedEnvironment::score_bounds() const {
  const ScoreBounds b = inner_.score_bounds();
  return {transform_(b.min), transform_(b.max)};
}

bool ScoreTransformedEnvironment::is_legal(const State& state,
                                           ActionId action) const {
  return inner_.is_legal(state, action);
}

std::string ScoreTransformedEnvironment::action_name(ActionId action) const {
  return inner_.action_name(action);
}

}  // namespace omcts
