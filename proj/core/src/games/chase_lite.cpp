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

#include "omcts/games/chase_lite.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "omcts/errors.hpp"

namespace omcts::games {
namespace {

const ChaseLite::ChaseState& as_chase(const State& state) {
  const auto* s = dynamic_cast<const ChaseLite::ChaseState*>(&state);
  if (s == nullptr) throw InvalidState("not a chase state");
  return *s;
}

bool occupied_by_other(const ChaseLite::ChaseState& s, std::size_t self, Cell c) {
  for (std::size_t j = 0; j < s.targets.size(); ++j) {
    if (j != self && s.targets[j].kind != ChaseLite::Kind::kCaught &&
        s.targets[j].cell == c) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string ChaseLite::ChaseState::to_string() const {
  std::ostringstream out;
  out << "chase{agent=(" << agent.x << ',' << agent.y << ") caught=" << caught
      << " turn=" << turn << " status=" << omcts::to_string(status) << " targets=[";
  for (const Target& t : targets) {
    const char tag = t.kind == Kind::kFleeing ? 'f' : t.kind == Kind::kChaser ? 'c' : 'x';
    out << tag << '(' << t.cell.x << ',' << t.cell.y << ')';
  }
  out << "]}";
  return out.str();
}

ChaseLite::ChaseLite(ChaseConfig config) : config_(config) {
  if (config_.size < 3) throw ConfigError("chase size must be >= 3");
  if (config_.targets < 1 || config_.targets > 8) {
    throw ConfigError("chase needs between 1 and 8 targets");
  }
  if (config_.max_turns < 1) throw ConfigError("chase turns must be >= 1");
  for (const double p : {config_.flee_prob, config_.chase_prob}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError("chase probabilities must lie in [0, 1]");
    }
  }
}

bool ChaseLite::inside(Cell c) const {
  return c.x >= 0 && c.y >= 0 && c.x < config_.size && c.y < config_.size;
}

std::unique_ptr<State> ChaseLite::initial_state() const {
  const int n = config_.size - 1;
  const int mid = config_.size / 2;
  const Cell spots[] = {{0, 0}, {n, n}, {0, n}, {n, 0},
                        {mid, 0}, {mid, n}, {0, mid}, {n, mid}};
  auto s = std::make_unique<ChaseState>();
  s->agent = {mid, mid};
  for (int i = 0; i < config_.targets; ++i) {
    s->targets.push_back({spots[i], Kind::kFleeing});
  }
  return s;
}

std::vector<ActionId> ChaseLite::legal_actions(const State& state) const {
  if (is_terminal(state)) return {};
  return {kUp, kDown, kLeft, kRight, kStay};
}

bool ChaseLite::is_legal(const State& state, ActionId action) const {
  return !is_terminal(state) && action >= kUp && action <= kStay;
}

void ChaseLite::move_fleeing(ChaseState& s, std::size_t i,
                             RandomSource& rng) const {
  const Cell from = s.targets[i].cell;
  std::vector<Cell> options;
  for (int m = -1; m < 4; ++m) {
    const Cell c = m < 0 ? from : moved(from, m);
    if (inside(c) && !(c == s.agent) && !occupied_by_other(s, i, c)) {
      options.push_back(c);
    }
  }
  if (options.empty()) return;
  if (rng.bernoulli(config_.flee_prob)) {
    int best = -1;
    std::vector<Cell> best_cells;
    for (const Cell c : options) {
      const int d = manhattan(c, s.agent);
      if (d > best) {
        best = d;
        best_cells.clear();
      }
      if (d == best) best_cells.push_back(c);
    }
    s.targets[i].cell = best_cells[rng.uniform_index(best_cells.size())];
  } else {
    s.targets[i].cell = options[rng.uniform_index(options.size())];
  }
}

void ChaseLite::move_chaser(ChaseState& s, std::size_t i,
                            RandomSource& rng) const {
  if (!rng.bernoulli(config_.chase_prob)) return;
  const Cell from = s.targets[i].cell;
  int best = std::numeric_limits<int>::max();
  std::vector<Cell> best_cells;
  for (int m = 0; m < 4; ++m) {
    const Cell c = moved(from, m);
    if (!inside(c) || occupied_by_other(s, i, c)) continue;
    const int d = manhattan(c, s.agent);
    if (d < best) {
      best = d;
      best_cells.clear();
    }
    if (d == best) best_cells.push_back(c);
  }
  if (best_cells.empty() || best >= manhattan(from, s.agent)) return;
  s.targets[i].cell = best_cells[rng.uniform_index(best_cells.size())];
}

std::unique_ptr<State> ChaseLite::transition(const State& state, ActionId action,
                                             RandomSource& rng) const {
  const ChaseState& s = as_chase(state);
  if (!is_legal(s, action)) {
    throw IllegalAction("chase: illegal action " + std::to_string(action));
  }
  auto next = std::make_unique<ChaseState>(s);
  ChaseState& n = *next;
  ++n.turn;

  const Cell target = moved(n.agent, action);
  if (inside(target)) n.agent = target;

  for (Target& t : n.targets) {
    if (t.kind == Kind::kCaught || !(t.cell == n.agent)) continue;
    if (t.kind == Kind::kChaser) {
      n.status = GameStatus::kLost;
      return next;
    }
    t.kind = Kind::kCaught;
    ++n.caught;
  }

  for (std::size_t i = 0; i < n.targets.size(); ++i) {
    if (n.targets[i].kind == Kind::kFleeing) {
      move_fleeing(n, i, rng);
    } else if (n.targets[i].kind == Kind::kChaser) {
      move_chaser(n, i, rng);
      if (n.targets[i].cell == n.agent) {
        n.status = GameStatus::kLost;
        return next;
      }
    }
  }

  const bool has_chaser =
      std::any_of(n.targets.begin(), n.targets.end(),
                  [](const Target& t) { return t.kind == Kind::kChaser; });
  if (!has_chaser) {
    for (Target& t : n.targets) {
      if (t.kind != Kind::kFleeing) continue;
      const bool near_carcass = std::any_of(
          n.targets.begin(), n.targets.end(), [&](const Target& other) {
            return other.kind == Kind::kCaught && manhattan(other.cell, t.cell) <= 1;
          });
      if (near_carcass) {
        t.kind = Kind::kChaser;
        break;
      }
    }
  }

  const bool any_fleeing =
      std::any_of(n.targets.begin(), n.targets.end(),
                  [](const Target& t) { return t.kind == Kind::kFleeing; });
  if (!any_fleeing) {
    n.status = GameStatus::kWon;
  } else if (n.turn >= config_.max_turns) {
    n.status = GameStatus::kLost;
  }
  return next;
}

bool ChaseLite::is_terminal(const State& state) const {
  return as_chase(state).status != GameStatus::kPlaying;
}

Outcome ChaseLite::outcome(const State& state) const {
  const ChaseState& s = as_chase(state);
  return Outcome(s.status, static_cast<double>(s.caught));
}

ScoreBounds ChaseLite::score_bounds() const {
  return {0.0, static_cast<double>(config_.targets)};
}

std::string ChaseLite::action_name(ActionId action) const {
  if (action >= kUp && action <= kRight) {
    return kMoveNames[static_cast<std::size_t>(action)];
  }
  if (action == kStay) return "stay";
  return Environment::action_name(action);
}

}  // namespace omcts::games
