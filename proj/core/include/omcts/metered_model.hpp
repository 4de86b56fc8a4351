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

#include <cstdint>
#include <memory>

#include "omcts/environment.hpp"

namespace omcts {

// Wraps an environment and counts forward-model calls against a budget.
// calls_used() never exceeds budget(); every successful step() adds one.
class MeteredModel {
 public:
  MeteredModel(const Environment& env, std::int64_t budget);

  // Checks, in order: state nonterminal (InvalidState), action legal
  // (IllegalAction), budget left (BudgetExhausted). Rejected calls are free.
  std::unique_ptr<State> step(const State& state, ActionId action,
                              RandomSource& rng);

  const Environment& environment() const noexcept { return env_; }
  std::int64_t calls_used() const noexcept { return calls_used_; }
  std::int64_t budget() const noexcept { return budget_; }
  std::int64_t remaining() const noexcept { return budget_ - calls_used_; }
  bool exhausted() const noexcept { return calls_used_ >= budget_; }

 private:
  const Environment& env_;
  std::int64_t budget_;
  std::int64_t calls_used_ = 0;
};

}  // namespace omcts
