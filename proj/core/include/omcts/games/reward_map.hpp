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

#include "omcts/environment.hpp"
#include "omcts/outcome.hpp"

namespace omcts::games {

// Maps an outcome into [0, 1] for the numeric estimators: the unit interval is
// cut into three equal bands (lost, playing, won) and the score, normalized by
// the game's global score bounds, positions the value inside its band.
//
// Throws DegenerateBounds if min > max and ScoreOutOfBounds if the score lies
// outside the bounds. When min == max the score carries no information and the
// value is the bottom of the status band.
double reward_map(const Outcome& outcome, double score_min, double score_max);

inline double reward_map(const Outcome& outcome, const ScoreBounds& bounds) {
  return reward_map(outcome, bounds.min, bounds.max);
}

}  // namespace omcts::games
