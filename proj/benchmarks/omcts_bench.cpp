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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "omcts/games/registry.hpp"
#include "omcts/metered_model.hpp"
#include "omcts/outcome_table.hpp"
#include "omcts/pb_search.hpp"
#include "omcts/random.hpp"
#include "omcts/search.hpp"
#include "omcts/tree_node.hpp"

namespace omcts {
namespace {

// Record cost grows with the number of actions and distinct outcomes.
void BM_OutcomeTableRecord(benchmark::State& state) {
  const auto k = static_cast<ActionId>(state.range(0));
  const auto ordinals = static_cast<std::size_t>(state.range(1));
  std::vector<ActionId> ids;
  for (ActionId a = 0; a < k; ++a) ids.push_back(a);
  RandomSource rng(1);
  for (auto _ : state) {
    state.PauseTiming();
    OutcomeTable table(ids);
    state.ResumeTiming();
    for (int i = 0; i < 1000; ++i) {
      const auto o = static_cast<double>(rng.uniform_index(ordinals));
      table.record(static_cast<ActionId>(rng.uniform_index(k)),
                   Outcome(GameStatus::kPlaying, o));
    }
    benchmark::DoNotOptimize(table.total());
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_OutcomeTableRecord)->ArgsProduct({{2, 5, 9}, {8, 64, 1000}});

void BM_BordaScore(benchmark::State& state) {
  const auto k = static_cast<ActionId>(state.range(0));
  std::vector<ActionId> ids;
  for (ActionId a = 0; a < k; ++a) ids.push_back(a);
  OutcomeTable table(ids);
  RandomSource rng(2);
  for (int i = 0; i < 1000; ++i) {
    table.record(static_cast<ActionId>(i % k), Outcome(GameStatus::kPlaying, rng.uniform()));
  }
  for (auto _ : state) {
    for (const ActionId a : ids) benchmark::DoNotOptimize(table.borda_score(a));
  }
}
BENCHMARK(BM_BordaScore)->Arg(2)->Arg(5)->Arg(9);

void BM_AverageValue(benchmark::State& state) {
  const auto k = static_cast<ActionId>(state.range(0));
  std::vector<ActionId> ids;
  for (ActionId a = 0; a < k; ++a) ids.push_back(a);
  RandomSource rng(2);
  TreeNode node(false);
  node.initialize(ids, rng);
  for (int i = 0; i < 1000; ++i) {
    node.record(node.edge_index(static_cast<ActionId>(i % k)), Outcome(GameStatus::kPlaying, 0.0),
                rng.uniform());
  }
  for (auto _ : state) {
    for (const ActionId a : ids) benchmark::DoNotOptimize(node_value(node, a, AverageEstimator{}));
  }
}
BENCHMARK(BM_AverageValue)->Arg(2)->Arg(5)->Arg(9);

Estimator estimator_arg(int64_t i) {
  switch (i) {
    case 0: return AverageEstimator{};
    case 1: return MixMaxEstimator{0.25};
    case 2: return NodeNormalizedEstimator{};
    default: return BordaEstimator{};
  }
}

const char* kGames[] = {"gapworld", "twoarm", "chase", "surround"};

// One full decision at budget 1000 from the initial state.
void BM_Search(benchmark::State& state) {
  const auto env = games::make_game(kGames[state.range(0)]);
  SearchConfig cfg;
  cfg.estimator = estimator_arg(state.range(1));
  cfg.budget = 1000;
  const auto start = env->initial_state();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    MeteredModel model(*env, cfg.budget);
    benchmark::DoNotOptimize(run_search(model, *start, cfg).action);
  }
  state.SetLabel(std::string(kGames[state.range(0)]));
}
BENCHMARK(BM_Search)->ArgsProduct({{0, 1, 2, 3}, {0, 1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_PbSearch(benchmark::State& state) {
  const auto env = games::make_game(kGames[state.range(0)]);
  SearchConfig cfg;
  cfg.budget = 1000;
  const auto start = env->initial_state();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    MeteredModel model(*env, cfg.budget);
    benchmark::DoNotOptimize(run_search_pb(model, *start, cfg).action);
  }
  state.SetLabel(std::string(kGames[state.range(0)]));
}
BENCHMARK(BM_PbSearch)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace omcts

BENCHMARK_MAIN();
