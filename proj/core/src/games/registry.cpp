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

#include "omcts/games/registry.hpp"

#include <charconv>
#include <functional>
#include <system_error>

#include "omcts/errors.hpp"
#include "omcts/games/chase_lite.hpp"
#include "omcts/games/gap_world.hpp"
#include "omcts/games/surround_lite.hpp"
#include "omcts/games/two_arm_dilemma.hpp"

namespace omcts::games {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("bad number for '" + std::string(key) + "': " + std::string(text));
  }
  return value;
}

int to_int(std::string_view key, std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("bad integer for '" + std::string(key) + "': " + std::string(text));
  }
  return value;
}

std::vector<int> to_int_list(std::string_view key, std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t slash = text.find('/', start);
    out.push_back(to_int(key, text.substr(start, slash - start)));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return out;
}

// Applies each parameter through a per-key setter and rejects unknown keys.
using Setter = std::function<void(std::string_view key, std::string_view value)>;

void apply(const GameSpec& spec, const std::map<std::string, Setter>& setters) {
  for (const auto& [key, value] : spec.params) {
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("unknown parameter '" + key + "' for game " + spec.name);
    }
    it->second(key, value);
  }
}

}  // namespace

GameSpec parse_game_spec(std::string_view text) {
  text = trim(text);
  GameSpec spec;
  const std::size_t colon = text.find(':');
  spec.name = std::string(trim(text.substr(0, colon)));
  if (spec.name.empty()) throw ConfigError("empty game name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("game parameter needs key=value: " + std::string(item));
    }
    spec.params[std::string(trim(item.substr(0, eq)))] =
        std::string(trim(item.substr(eq + 1)));
  }
  return spec;
}

std::unique_ptr<Environment> make_game(std::string_view text) {
  const GameSpec spec = parse_game_spec(text);
  if (spec.name == "gapworld") {
    GapWorldConfig c;
    apply(spec, {
        {"length", [&](auto k, auto v) { c.length = to_int(k, v); }},
        {"gaps", [&](auto k, auto v) { c.gaps = to_int_list(k, v); }},
        {"p", [&](auto k, auto v) { c.jump_success = to_double(k, v); }},
        {"turns", [&](auto k, auto v) { c.max_turns = to_int(k, v); }},
    });
    return std::make_unique<GapWorld>(c);
  }
  if (spec.name == "twoarm") {
    TwoArmConfig c;
    apply(spec, {
        {"circle", [&](auto k, auto v) { c.circle = to_double(k, v); }},
        {"high", [&](auto k, auto v) { c.star_high = to_double(k, v); }},
        {"low", [&](auto k, auto v) { c.star_low = to_double(k, v); }},
        {"q", [&](auto k, auto v) { c.star_prob = to_double(k, v); }},
    });
    return std::make_unique<TwoArmDilemma>(c);
  }
  if (spec.name == "chase") {
    ChaseConfig c;
    apply(spec, {
        {"size", [&](auto k, auto v) { c.size = to_int(k, v); }},
        {"targets", [&](auto k, auto v) { c.targets = to_int(k, v); }},
        {"turns", [&](auto k, auto v) { c.max_turns = to_int(k, v); }},
        {"flee", [&](auto k, auto v) { c.flee_prob = to_double(k, v); }},
        {"chase", [&](auto k, auto v) { c.chase_prob = to_double(k, v); }},
    });
    return std::make_unique<ChaseLite>(c);
  }
  if (spec.name == "surround") {
    SurroundConfig c;
    apply(spec, {
        {"size", [&](auto k, auto v) { c.size = to_int(k, v); }},
        {"turns", [&](auto k, auto v) { c.max_turns = to_int(k, v); }},
    });
    return std::make_unique<SurroundLite>(c);
  }
  throw ConfigError("unknown game '" + spec.name + "'");
}

std::vector<GameInfo> list_games() {
  return {
      {"gapworld", "reach the right end of a strip, jumping deadly gaps",
       "length=12 gaps=5/9 p=0.8 turns=30"},
      {"twoarm", "one decision: safe circle arm vs risky star arm",
       "circle=0.5 high=0.6 low=0.1 q=0.7"},
      {"chase", "catch fleeing targets; one may turn into a chaser",
       "size=7 targets=3 turns=60 flee=0.75 chase=0.8"},
      {"surround", "score by moving without hitting trails; quit wins",
       "size=7 turns=50"},
  };
}

}  // namespace omcts::games
