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

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "omcts/outcome.hpp"
#include "omcts/random.hpp"

namespace omcts {

using ActionId = int;

// Opaque game state. Concrete games derive through StateBase, which supplies
// cloning and value equality from the derived struct.
class State {
 public:
  virtual ~State() = default;
  virtual std::unique_ptr<State> clone() const = 0;
  virtual bool equals(const State& other) const = 0;
  virtual std::string to_string() const = 0;
};

template <typename Derived>
class StateBase : public State {
 public:
  std::unique_ptr<State> clone() const override {
    return std::make_unique<Derived>(static_cast<const Derived&>(*this));
  }
  bool equals(const State& other) const override {
    const auto* o = dynamic_cast<const Derived*>(&other);
    return o != nullptr && *o == static_cast<const Derived&>(*this);
  }
  // Lets Derived default its own operator==.
  bool operator==(const StateBase&) const { return true; }
};

// Lowest and highest score a game can produce. Needed by the [0,1] reward
// mapping of the numeric estimators.
struct ScoreBounds {
  double min = 0.0;
  double max = 1.0;
};

// Stochastic forward model of an episodic game.
//
// Contract:
//  * legal_actions() of a nonterminal state is nonempty.
//  * outcome() of a terminal state has status != Playing, and of a nonterminal
//    state has status == Playing.
//  * transition() draws randomness only from the supplied RandomSource, so the
//    same (state, action, source state) always yields the same successor.
//  * transition() throws IllegalAction for an action not in legal_actions().
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  virtual std::unique_ptr<State> initial_state() const = 0;
  virtual std::vector<ActionId> legal_actions(const State& state) const = 0;
  virtual std::unique_ptr<State> transition(const State& state, ActionId action,
                                            RandomSource& rng) const = 0;
  virtual bool is_terminal(const State& state) const = 0;
  virtual Outcome outcome(const State& state) const = 0;
  virtual ScoreBounds score_bounds() const = 0;

  virtual bool is_legal(const State& state, ActionId action) const {
    const auto actions = legal_actions(state);
    return std::find(actions.begin(), actions.end(), action) != actions.end();
  }
  virtual std::string action_name(ActionId action) const {
    return std::to_string(action);
  }
};

// Presents another environment with every score passed through a strictly
// increasing function. Transitions, randomness and statuses are untouched, so
// any purely ordinal agent must behave identically on both.
class ScoreTransformedEnvironment final : public Environment {
 public:
  using Transform = std::function<double(double)>;

  ScoreTransformedEnvironment(const Environment& inner, Transform transform,
                              std::string label);

  std::string name() const override;
  std::unique_ptr<State> initial_state() const override;
  std::vector<ActionId> legal_actions(const State& state) const override;
  std::unique_ptr<State> transition(const State& state, ActionId action,
                                    RandomSource& rng) const override;
  bool is_terminal(const State& state) const override;
  Outcome outcome(const State& state) const override;
  ScoreBounds score_bounds() const override;
  bool is_legal(const State& state, ActionId action) const override;
  std::string action_name(ActionId action) const override;

 private:
  const Environment& inner_;
  Transform transform_;
  std::string label_;
};

}  // namespace omcts
