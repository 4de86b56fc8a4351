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

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "omcts/environment.hpp"

namespace omcts::games {

// A game named by text: "name" or "name:key=value,key=value". List values use
// '/' as separator, e.g. "gapworld:gaps=5/9,p=0.9".
struct GameSpec {
  std::string name;
  std::map<std::string, std::string> params;
};

GameSpec parse_game_spec(std::string_view text);

// Builds a game from its textual config. Throws ConfigError for an unknown
// name, unknown key or malformed value.
std::unique_ptr<Environment> make_game(std::string_view text);

struct GameInfo {
  std::string name;
  std::string summary;
  std::string parameters;
};

std::vector<GameInfo> list_games();

}  // namespace omcts::games
