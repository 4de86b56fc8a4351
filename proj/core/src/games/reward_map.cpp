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

#include "omcts/games/reward_map.hpp"

#include <string>

#include "omcts/errors.hpp"

namespace omcts::games {

double reward_map(const Outcome& outcome, double score_min, double score_max) {
  if (!(score_min <= score_max)) {
    throw DegenerateBounds("score bounds are inverted");
  }
  const double score = outcome.score();
  if (score < score_min || score > score_max) {
    throw ScoreOutOfBounds("score " + std::to_string(score) +
                           " outside [" + std::to_string(score_min) + ", " +
                           std::to_string(score_max) + "]");
  }
  const double normalized =
      score_min == score_max ? 0.0 : (score - score_min) / (score_max - score_min);
  double band = 0.0;
  switch (outcome.status()) {
    case GameStatus::kLost:
      band = 0.0;
      break;
    case GameStatus::kPlaying:
      band = 1.0 / 3.0;
      break;
    case GameStatus::kWon:
      band = 2.0 / 3.0;
      break;
  }
  return normalized / 3.0 + band;
}

}  // namespace omcts::games
