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

#include "omcts/outcome.hpp"

#include <cmath>
#include <sstream>

#include "omcts/errors.hpp"

namespace omcts {

std::string_view to_string(GameStatus status) {
  switch (status) {
    case GameStatus::kLost:
      return "lost";
    case GameStatus::kPlaying:
      return "playing";
    case GameStatus::kWon:
      return "won";
  }
  return "unknown";
}

Outcome::Outcome(GameStatus status, double score)
    : status_(status), score_(score == 0.0 ? 0.0 : score) {
  if (!std::isfinite(score)) {
    throw InvalidOutcome("outcome score must be finite");
  }
}

std::strong_ordering operator<=>(const Outcome& a, const Outcome& b) noexcept {
  if (auto c = a.status_ <=> b.status_; c != 0) return c;
  if (a.score_ < b.score_) return std::strong_ordering::less;
  if (a.score_ > b.score_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_outcomes(const Outcome& a, const Outcome& b) noexcept {
  return a <=> b;
}

std::string to_string(const Outcome& outcome) {
  std::ostringstream out;
  out << '(' << to_string(outcome.status()) << ", " << outcome.score() << ')';
  return out.str();
}

}  // namespace omcts
