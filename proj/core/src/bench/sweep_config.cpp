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

#include "omcts/bench/sweep_config.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "omcts/errors.hpp"

namespace omcts::bench {
namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto item = trim(text.substr(start, end - start));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

template <typename T>
T parse_value(std::string_view text, std::string_view key, int line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("line " + std::to_string(line) + ": bad value '" +
                      std::string(text) + "' for " + std::string(key));
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, std::string_view key, int line) {
  std::vector<T> values;
  for (const auto& item : split_list(text)) values.push_back(parse_value<T>(item, key, line));
  if (values.empty()) {
    throw ConfigError("line " + std::to_string(line) + ": empty list for " + std::string(key));
  }
  return values;
}

bool parse_bool(std::string_view text, int line) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("line " + std::to_string(line) + ": expected a boolean, got '" +
                    std::string(text) + "'");
}

}  // namespace

SweepGrid parse_sweep_config(std::istream& in) {
  SweepGrid grid;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line) + ": expected key = value");
    }
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(line) + ": missing value for " +
                        std::string(key));
    }

    if (key == "game") {
      grid.games.emplace_back(value);
    } else if (key == "budgets" || key == "budget") {
      grid.budgets = parse_list<std::int64_t>(value, key, line);
    } else if (key == "agents" || key == "agent") {
      grid.agents.clear();
      for (const auto& name : split_list(value)) grid.agents.push_back(parse_agent(name));
    } else if (key == "C" || key == "c") {
      grid.c_values = parse_list<double>(value, key, line);
    } else if (key == "RL" || key == "rl") {
      grid.rl_values = parse_list<int>(value, key, line);
    } else if (key == "Q" || key == "q") {
      grid.q = parse_value<double>(value, key, line);
    } else if (key == "reps" || key == "repetitions") {
      grid.repetitions = parse_value<int>(value, key, line);
    } else if (key == "seed") {
      grid.seed = parse_value<std::uint64_t>(value, key, line);
    } else if (key == "threads") {
      grid.threads = parse_value<int>(value, key, line);
    } else if (key == "timing") {
      grid.timing = parse_bool(value, line);
    } else {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" +
                        std::string(key) + "'");
    }
  }
  if (grid.games.empty()) throw ConfigError("sweep config names no game");
  return grid;
}

SweepGrid load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_sweep_config(in);
}

}  // namespace omcts::bench
