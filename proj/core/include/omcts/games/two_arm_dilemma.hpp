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

#include "omcts/environment.hpp"

namespace omcts::games {

struct TwoArmConfig {
  double circle = 0.5;
  double star_high = 0.6;
  double star_low = 0.1;
  double star_prob = 0.7;
};

// A single decision between a safe arm (circle, fixed score) and a risky arm
// (star) that beats the circle with probability star_prob but has the lower
// mean. Every episode ends Won after one step with the drawn score.
//
// The constructor enforces star_high > circle > star_low and
// star_prob * star_high + (1 - star_prob) * star_low < circle.
class TwoArmDilemma final : public Environment {
 public:
  enum Action : ActionId { kCircle = 0, kStar = 1 };

  struct ArmState : StateBase<ArmState> {
    bool done = false;
    double score = 0.0;

    bool operator==(const ArmState&) const = default;
    std::string to_string() const override;
  };

  explicit TwoArmDilemma(TwoArmConfig config = {});

  const TwoArmConfig& config() const noexcept { return config_; }
  double star_mean() const noexcept;

  std::string name() const override { return "twoarm"; }
  std::unique_ptr<State> initial_state() const override;
  std::vector<ActionId> legal_actions(const State& state) const override;
  std::unique_ptr<State> transition(const State& state, ActionId action,
                                    RandomSource& rng) const override;
  bool is_terminal(const State& state) const override;
  Outcome outcome(const State& state) const override;
  ScoreBounds score_bounds() const override;
  std::string action_name(ActionId action) const override;

 private:
  TwoArmConfig config_;
};

}  // namespace omcts::games
