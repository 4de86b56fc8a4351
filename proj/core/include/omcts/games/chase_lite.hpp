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

#include <string>
#include <vector>

#include "omcts/environment.hpp"
#include "omcts/games/grid.hpp"

namespace omcts::games {

struct ChaseConfig {
  int size = 7;
  int targets = 3;
  int max_turns = 60;
  double flee_prob = 0.75;   // chance a target makes its best escape move
  double chase_prob = 0.8;   // chance the chaser closes in on a given turn
};

// Miniature pursuit game. The agent catches fleeing targets by stepping onto
// them; a caught target leaves a carcass. The first fleeing target that comes
// next to a carcass turns into the chaser, which hunts the agent and ends the
// game on contact. Won when no fleeing target is left, lost on contact or when
// the turn cap is reached. Score = targets caught.
class ChaseLite final : public Environment {
 public:
  enum Action : ActionId { kStay = 4 };
  enum class Kind : int { kFleeing, kChaser, kCaught };

  struct Target {
    Cell cell;
    Kind kind = Kind::kFleeing;
    bool operator==(const Target&) const = default;
  };

  struct ChaseState : StateBase<ChaseState> {
    Cell agent;
    std::vector<Target> targets;
    int caught = 0;
    int turn = 0;
    GameStatus status = GameStatus::kPlaying;

    bool operator==(const ChaseState&) const = default;
    std::string to_string() const override;
  };

  explicit ChaseLite(ChaseConfig config = {});

  const ChaseConfig& config() const noexcept { return config_; }

  std::string name() const override { return "chase"; }
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
  bool inside(Cell c) const;
  void move_fleeing(ChaseState& s, std::size_t i, RandomSource& rng) const;
  void move_chaser(ChaseState& s, std::size_t i, RandomSource& rng) const;

  ChaseConfig config_;
};

}  // namespace omcts::games
