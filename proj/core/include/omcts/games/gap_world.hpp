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

namespace omcts::games {

struct GapWorldConfig {
  int length = 12;
  std::vector<int> gaps = {5, 9};
  double jump_success = 0.8;
  int max_turns = 30;
};

// One-dimensional platformer. The agent starts at cell 0 and wins on reaching
// cell `length`. Gap cells are deadly: walking into one, or landing in one,
// loses. Jumping moves two cells; a jump over a gap succeeds with probability
// `jump_success` and otherwise loses. Standing still is always safe but the
// episode is lost once `max_turns` turns pass. Score = rightmost cell reached.
class GapWorld final : public Environment {
 public:
  enum Action : ActionId { kStand = 0, kWalk = 1, kJump = 2 };

  struct GapState : StateBase<GapState> {
    int position = 0;
    int best = 0;
    int turn = 0;
    GameStatus status = GameStatus::kPlaying;

    bool operator==(const GapState&) const = default;
    std::string to_string() const override;
  };

  explicit GapWorld(GapWorldConfig config = {});

  const GapWorldConfig& config() const noexcept { return config_; }
  bool is_gap(int cell) const;

  std::string name() const override { return "gapworld"; }
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
  GapWorldConfig config_;
  std::vector<bool> gap_mask_;
};

}  // namespace omcts::games
