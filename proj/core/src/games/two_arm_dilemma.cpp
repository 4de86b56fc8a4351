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

#include "omcts/games/two_arm_dilemma.hpp"

#include <algorithm>
#include <sstream>

#include "omcts/errors.hpp"

namespace omcts::games {
namespace {

const TwoArmDilemma::ArmState& as_arm(const State& state) {
  const auto* s = dynamic_cast<const TwoArmDilemma::ArmState*>(&state);
  if (s == nullptr) throw InvalidState("not a twoarm state");
  return *s;
}

}  // namespace

std::string TwoArmDilemma::ArmState::to_string() const {
  std::ostringstream out;
  out << "twoarm{done=" << done << " score=" << score << '}';
  return out.str();
}

TwoArmDilemma::TwoArmDilemma(TwoArmConfig config) : config_(config) {
  if (!(config_.star_prob > 0.0 && config_.star_prob < 1.0)) {
    throw ConfigError("twoarm star probability must lie in (0, 1)");
  }
  if (!(config_.star_high > config_.circle && config_.circle > config_.star_low)) {
    throw ConfigError("twoarm needs star_high > circle > star_low");
  }
  if (!(star_mean() < config_.circle)) {
    throw ConfigError("twoarm needs the star mean below the circle score");
  }
}

double TwoArmDilemma::star_mean() const noexcept {
  return config_.star_prob * config_.star_high +
         (1.0 - config_.star_prob) * config_.star_low;
}

std::unique_ptr<State> TwoArmDilemma::initial_state() const {
  return std::make_unique<ArmState>();
}

std::vector<ActionId> TwoArmDilemma::legal_actions(const State& state) const {
  if (as_arm(state).done) return {};
  return {kCircle, kStar};
}

std::unique_ptr<State> TwoArmDilemma::transition(const State& state,
                                                 ActionId action,
                                                 RandomSource& rng) const {
  const ArmState& s = as_arm(state);
  if (s.done || (action != kCircle && action != kStar)) {
    throw IllegalAction("twoarm: illegal action " + std::to_string(action));
  }
  auto next = std::make_unique<ArmState>();
  next->done = true;
  if (action == kCircle) {
    next->score = config_.circle;
  } else {
    next->score = rng.bernoulli(config_.star_prob) ? config_.star_high
                                                   : config_.star_low;
  }
  return next;
}

bool TwoArmDilemma::is_terminal(const State& state) const {
  return as_arm(state).done;
}

Outcome TwoArmDilemma::outcome(const State& state) const {
  const ArmState& s = as_arm(state);
  return Outcome(s.done ? GameStatus::kWon : GameStatus::kPlaying, s.score);
}

ScoreBounds TwoArmDilemma::score_bounds() const {
  return {std::min(0.0, config_.star_low), std::max(1.0, config_.star_high)};
}

std::string TwoArmDilemma::action_name(ActionId action) const {
  switch (action) {
    case kCircle:
      return "circle";
    case kStar:
      return "star";
    default:
      return Environment::action_name(action);
  }
}

}  // namespace omcts::games
