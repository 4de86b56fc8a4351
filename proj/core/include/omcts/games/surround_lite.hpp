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

struct SurroundConfig {
  int size = 7;
  int max_turns = 50;
};

// Miniature trail game. Agent and enemy both leave a trail on every cell they
// leave. The agent scores one point per move and may quit at any time, which
// wins immediately; surviving to the turn cap also wins. Moving off the grid
// or into any trail loses, as does the enemy running into the agent. The enemy
// moves to a uniformly random free neighbour each turn.
class SurroundLite final : public Environment {
 public:
  enum Action : ActionId { kQuit = 4 };

  struct SurroundState : StateBase<SurroundState> {
    Cell agent;
    Cell enemy;
    std::vector<char> trail;  // size * size, row-major, nonzero = blocked
    int moves = 0;
    int turn = 0;
    GameStatus status = GameStatus::kPlaying;

    bool operator==(const SurroundState&) const = default;
    std::string to_string() const override;
  };

  explicit SurroundLite(SurroundConfig config = {});

  const SurroundConfig& config() const noexcept { return config_; }

  std::string name() const override { return "surround"; }
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
  std::size_t index(Cell c) const;

  SurroundConfig config_;
};

}  // namespace omcts::games
