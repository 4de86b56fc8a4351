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

#include "omcts/games/surround_lite.hpp"

#include <sstream>

#include "omcts/errors.hpp"

namespace omcts::games {
namespace {

const SurroundLite::SurroundState& as_surround(const State& state) {
  const auto* s = dynamic_cast<const SurroundLite::SurroundState*>(&state);
  if (s == nullptr) throw InvalidState("not a surround state");
  return *s;
}

}  // namespace

std::string SurroundLite::SurroundState::to_string() const {
  std::ostringstream out;
  out << "surround{agent=(" << agent.x << ',' << agent.y << ") enemy=(" << enemy.x
      << ',' << enemy.y << ") moves=" << moves << " turn=" << turn
      << " status=" << omcts::to_string(status) << '}';
  return out.str();
}

SurroundLite::SurroundLite(SurroundConfig config) : config_(config) {
  if (config_.size < 4) throw ConfigError("surround size must be >= 4");
  if (config_.max_turns < 1) throw ConfigError("surround turns must be >= 1");
}

bool SurroundLite::inside(Cell c) const {
  return c.x >= 0 && c.y >= 0 && c.x < config_.size && c.y < config_.size;
}

std::size_t SurroundLite::index(Cell c) const {
  return static_cast<std::size_t>(c.y * config_.size + c.x);
}

std::unique_ptr<State> SurroundLite::initial_state() const {
  auto s = std::make_unique<SurroundState>();
  s->agent = {1, config_.size / 2};
  s->enemy = {config_.size - 2, config_.size / 2};
  s->trail.assign(static_cast<std::size_t>(config_.size * config_.size), 0);
  return s;
}

std::vector<ActionId> SurroundLite::legal_actions(const State& state) const {
  if (is_terminal(state)) return {};
  return {kUp, kDown, kLeft, kRight, kQuit};
}

bool SurroundLite::is_legal(const State& state, ActionId action) const {
  return !is_terminal(state) && action >= kUp && action <= kQuit;
}

std::unique_ptr<State> SurroundLite::transition(const State& state,
                                                ActionId action,
                                                RandomSource& rng) const {
  const SurroundState& s = as_surround(state);
  if (!is_legal(s, action)) {
    throw IllegalAction("surround: illegal action " + std::to_string(action));
  }
  auto next = std::make_unique<SurroundState>(s);
  SurroundState& n = *next;
  ++n.turn;
  if (action == kQuit) {
    n.status = GameStatus::kWon;
    return next;
  }

  const Cell target = moved(n.agent, action);
  if (!inside(target) || n.trail[index(target)] != 0 || target == n.enemy) {
    n.status = GameStatus::kLost;
    return next;
  }
  n.trail[index(n.agent)] = 1;
  n.agent = target;
  ++n.moves;

  std::vector<Cell> options;
  for (int m = 0; m < 4; ++m) {
    const Cell c = moved(n.enemy, m);
    if (inside(c) && n.trail[index(c)] == 0) options.push_back(c);
  }
  if (!options.empty()) {
    n.trail[index(n.enemy)] = 1;
    n.enemy = options[rng.uniform_index(options.size())];
  }
  if (n.enemy == n.agent) {
    n.status = GameStatus::kLost;
  } else if (n.turn >= config_.max_turns) {
    n.status = GameStatus::kWon;
  }
  return next;
}

bool SurroundLite::is_terminal(const State& state) const {
  return as_surround(state).status != GameStatus::kPlaying;
}

Outcome SurroundLite::outcome(const State& state) const {
  const SurroundState& s = as_surround(state);
  return Outcome(s.status, static_cast<double>(s.moves));
}

ScoreBounds SurroundLite::score_bounds() const {
  return {0.0, static_cast<double>(config_.max_turns)};
}

std::string SurroundLite::action_name(ActionId action) const {
  if (action >= kUp && action <= kRight) {
    return kMoveNames[static_cast<std::size_t>(action)];
  }
  if (action == kQuit) return "quit";
  return Environment::action_name(action);
}

}  // namespace omcts::games
