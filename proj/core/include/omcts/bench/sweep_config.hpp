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

#include <filesystem>
#include <iosfwd>

#include "omcts/bench/runner.hpp"

namespace omcts::bench {

// Sweep definition, one `key = value` per line, `#` starts a comment:
//
//   game    = gapworld          # repeat for more games; may carry a config
//   game    = twoarm:q=0.7
//   budgets = 250, 500          # default 250, 500, 1000, 10000
//   agents  = O-MCTS, MCTS      # default all five
//   C       = 0, 0.5, 1         # default 0 .. 2 in steps of 0.25
//   RL      = 5, 10             # default 5, 10, 25, 50
//   Q       = 0.25
//   reps    = 40
//   seed    = 7
//   threads = 4
//   timing  = false
//
// Throws ConfigError on unknown keys, bad values, or when no game is given.
SweepGrid parse_sweep_config(std::istream& in);
SweepGrid load_sweep_config(const std::filesystem::path& path);

}  // namespace omcts::bench
