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
#include <string>
#include <string_view>

#include "omcts/estimator.hpp"

namespace omcts::bench {

enum class AgentKind { kMcts, kOmcts, kNmcts, kMixMax, kPbMcts };

inline constexpr std::array<AgentKind, 5> kAllAgents = {
    AgentKind::kOmcts, AgentKind::kMcts, AgentKind::kNmcts, AgentKind::kMixMax,
    AgentKind::kPbMcts};

// Canonical names: MCTS, O-MCTS, N-MCTS, MixMax, PB-MCTS.
std::string_view to_string(AgentKind kind);
// Case-insensitive; also accepts omcts, nmcts, pbmcts, vanilla, borda.
AgentKind parse_agent(std::string_view text);

bool uses_q(AgentKind kind);

// Estimator driving the UCT agents; `q` only matters for MixMax. PB-MCTS has no
// value estimator and maps to Average.
Estimator estimator_for(AgentKind kind, double q);

std::string describe(AgentKind kind);

}  // namespace omcts::bench
