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

#include <string>
#include <variant>

namespace omcts {

// Mean of the mapped rewards (vanilla UCT).
struct AverageEstimator {};

// Q * max + (1 - Q) * mean of the mapped rewards; Q in [0, 1].
struct MixMaxEstimator {
  double q = 0.25;
};

// Mean of the mapped rewards rescaled by the min/max reward seen at the node.
struct NodeNormalizedEstimator {};

// Borda score over the node's ordinal outcome table.
struct BordaEstimator {};

using Estimator = std::variant<AverageEstimator, MixMaxEstimator,
                               NodeNormalizedEstimator, BordaEstimator>;

inline bool is_ordinal(const Estimator& e) {
  return std::holds_alternative<BordaEstimator>(e);
}

std::string to_string(const Estimator& e);

}  // namespace omcts
