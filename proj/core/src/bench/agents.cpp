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

#include "omcts/bench/agents.hpp"

#include <algorithm>
#include <cctype>

#include "omcts/errors.hpp"

namespace omcts::bench {

std::string_view to_string(AgentKind kind) {
  switch (kind) {
    case AgentKind::kMcts:
      return "MCTS";
    case AgentKind::kOmcts:
      return "O-MCTS";
    case AgentKind::kNmcts:
      return "N-MCTS";
    case AgentKind::kMixMax:
      return "MixMax";
    case AgentKind::kPbMcts:
      return "PB-MCTS";
  }
  return "?";
}

AgentKind parse_agent(std::string_view text) {
  std::string key;
  for (const char ch : text) {
    if (ch != '-' && ch != '_' && ch != ' ') {
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (key == "mcts" || key == "vanilla" || key == "uct") return AgentKind::kMcts;
  if (key == "omcts" || key == "ordinal" || key == "borda") return AgentKind::kOmcts;
  if (key == "nmcts" || key == "normalized") return AgentKind::kNmcts;
  if (key == "mixmax") return AgentKind::kMixMax;
  if (key == "pbmcts" || key == "preference") return AgentKind::kPbMcts;
  throw ConfigError("unknown agent '" + std::string(text) + "'");
}

bool uses_q(AgentKind kind) { return kind == AgentKind::kMixMax; }

Estimator estimator_for(AgentKind kind, double q) {
  switch (kind) {
    case AgentKind::kOmcts:
      return BordaEstimator{};
    case AgentKind::kNmcts:
      return NodeNormalizedEstimator{};
    case AgentKind::kMixMax:
      return MixMaxEstimator{q};
    case AgentKind::kMcts:
    case AgentKind::kPbMcts:
      break;
  }
  return AverageEstimator{};
}

std::string describe(AgentKind kind) {
  switch (kind) {
    case AgentKind::kMcts:
      return "UCT with averaged [0,1] rewards";
    case AgentKind::kOmcts:
      return "UCT with Borda scores over ordinal outcomes";
    case AgentKind::kNmcts:
      return "UCT with per-node min/max normalized rewards";
    case AgentKind::kMixMax:
      return "UCT with Q*max + (1-Q)*mean backups";
    case AgentKind::kPbMcts:
      return "binary-subtree search with RUCB duels";
  }
  return {};
}

}  // namespace omcts::bench
