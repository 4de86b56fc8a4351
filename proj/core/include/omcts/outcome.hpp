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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace omcts {

// Ordered Lost < Playing < Won.
enum class GameStatus : std::uint8_t { kLost = 0, kPlaying = 1, kWon = 2 };

std::string_view to_string(GameStatus status);

// The ordinal reward of a state: game status first, then score. Only the order
// between outcomes is meaningful to the ordinal estimators.
class Outcome {
 public:
  // Throws InvalidOutcome for a NaN or infinite score. A negative zero score is
  // stored as +0 so that equal outcomes are interchangeable.
  Outcome(GameStatus status, double score);

  GameStatus status() const noexcept { return status_; }
  double score() const noexcept { return score_; }

  friend std::strong_ordering operator<=>(const Outcome& a,
                                          const Outcome& b) noexcept;
  friend bool operator==(const Outcome& a, const Outcome& b) noexcept {
    return a.status_ == b.status_ && a.score_ == b.score_;
  }

 private:
  GameStatus status_;
  double score_;
};

// Lexicographic comparison on (status, score).
std::strong_ordering compare_outcomes(const Outcome& a, const Outcome& b) noexcept;

std::string to_string(const Outcome& outcome);

}  // namespace omcts
