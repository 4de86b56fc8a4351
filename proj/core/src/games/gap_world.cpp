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

#include "omcts/games/gap_world.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "omcts/errors.hpp"

namespace omcts::games {
namespace {

const GapWorld::GapState& as_gap(const State& state) {
  const auto* s = dynamic_cast<const GapWorld::GapState*>(&state);
  if (s == nullptr) throw InvalidState("not a gapworld state");
  return *s;
}

}  // namespace

std::string GapWorld::GapState::to_string() const {
  std::ostringstream out;
  out << "gapworld{pos=" << position << " best=" << best << " turn=" << turn
      << " status=" << omcts::to_string(status) << '}';
  return out.str();
}

GapWorld::GapWorld(GapWorldConfig config) : config_(std::move(config)) {
  if (config_.length < 2) throw ConfigError("gapworld length must be >= 2");
  if (!(config_.jump_success >= 0.0 && config_.jump_success <= 1.0)) {
    throw ConfigError("gapworld jump success must lie in [0, 1]");
  }
  if (config_.max_turns < 1) throw ConfigError("gapworld turns must be >= 1");
  gap_mask_.assign(static_cast<std::size_t>(config_.length) + 1, false);
  for (const int g : config_.gaps) {
    if (g <= 0 || g >= config_.length) {
      throw ConfigError("gapworld gaps must lie strictly between start and goal");
    }
    gap_mask_[static_cast<std::size_t>(g)] = true;
  }
}

bool GapWorld::is_gap(int cell) const {
  return cell > 0 && cell < config_.length &&
         gap_mask_[static_cast<std::size_t>(cell)];
}

std::unique_ptr<State> GapWorld::initial_state() const {
  return std::make_unique<GapState>();
}

std::vector<ActionId> GapWorld::legal_actions(const State& state) const {
  if (is_terminal(state)) return {};
  return {kStand, kWalk, kJump};
}

bool GapWorld::is_legal(const State& state, ActionId action) const {
  return !is_terminal(state) && action >= kStand && action <= kJump;
}

std::unique_ptr<State> GapWorld::transition(const State& state, ActionId action,
                                            RandomSource& rng) const {
  const GapState& s = as_gap(state);
  if (!is_legal(s, action)) {
    throw IllegalAction("gapworld: illegal action " + std::to_string(action));
  }
  auto next = std::make_unique<GapState>(s);
  ++next->turn;
  switch (action) {
    case kStand:
      break;
    case kWalk: {
      const int target = s.position + 1;
      if (is_gap(target)) {
        next->status = GameStatus::kLost;
      } else {
        next->position = std::min(target, config_.length);
      }
      break;
    }
    case kJump: {
      if (is_gap(s.position + 1) && !rng.bernoulli(config_.jump_success)) {
        next->status = GameStatus::kLost;
        break;
      }
      const int landing = std::min(s.position + 2, config_.length);
      if (is_gap(landing)) {
        next->status = GameStatus::kLost;
      } else {
        next->position = landing;
      }
      break;
    }
    default:
      break;
  }
  next->best = std::max(next->best, next->position);
  if (next->status == GameStatus::kPlaying) {
    if (next->position >= config_.length) {
      next->status = GameStatus::kWon;
    } else if (next->turn >= config_.max_turns) {
      next->status = GameStatus::kLost;
    }
  }
  return next;
}

bool GapWorld::is_terminal(const State& state) const {
  return as_gap(state).status != GameStatus::kPlaying;
}

Outcome GapWorld::outcome(const State& state) const {
  const GapState& s = as_gap(state);
  return Outcome(s.status, static_cast<double>(s.best));
}

ScoreBounds GapWorld::score_bounds() const {
  return {0.0, static_cast<double>(config_.length)};
}

std::string GapWorld::action_name(ActionId action) const {
  switch (action) {
    case kStand:
      return "stand";
    case kWalk:
      return "walk";
    case kJump:
      return "jump";
    default:
      return Environment::action_name(action);
  }
}

}  // namespace omcts::games
