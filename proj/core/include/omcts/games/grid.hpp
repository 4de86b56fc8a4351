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

#include <array>
#include <cstdlib>

#include "omcts/environment.hpp"

namespace omcts::games {

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

inline int manhattan(Cell a, Cell b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Movement actions shared by the grid games.
enum Move : ActionId { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };

inline Cell moved(Cell c, int move) {
  switch (move) {
    case kUp:
      return {c.x, c.y - 1};
    case kDown:
      return {c.x, c.y + 1};
    case kLeft:
      return {c.x - 1, c.y};
    case kRight:
      return {c.x + 1, c.y};
    default:
      return c;
  }
}

inline constexpr std::array<const char*, 4> kMoveNames = {"up", "down", "left",
                                                          "right"};

}  // namespace omcts::games
