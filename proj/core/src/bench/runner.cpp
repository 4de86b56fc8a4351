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

#include "omcts/bench/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "omcts/errors.hpp"
#include "omcts/games/registry.hpp"
#include "omcts/metered_model.hpp"
#include "omcts/pb_search.hpp"
#include "omcts/search.hpp"

namespace omcts::bench {
namespace {

// Guard against environments that never terminate under real play.
constexpr int kMaxDecisions = 100000;

}  // namespace

void validate(const RunSpec& spec) {
  if (spec.game.empty()) throw ConfigError("no game given");
  if (!std::isfinite(spec.c) || spec.c < 0.0) throw ConfigError("C must be >= 0");
  if (spec.rl < 1) throw ConfigError("RL must be >= 1");
  if (spec.budget < 1) throw ConfigError("budget must be >= 1");
  if (spec.repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (spec.q && !(*spec.q >= 0.0 && *spec.q <= 1.0)) {
    throw ConfigError("Q must lie in [0, 1]");
  }
}

std::uint64_t episode_seed(std::uint64_t spec_seed, int episode) {
  return RandomSource(spec_seed).derive(static_cast<std::uint64_t>(episode)).seed();
}

RunRecord run_episode(const RunSpec& spec, int episode, EpisodeTrace* trace) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  const auto env = games::make_game(spec.game);

  RunRecord rec;
  rec.game = spec.game;
  rec.agent = std::string(to_string(spec.agent));
  rec.budget = spec.budget;
  rec.c = spec.c;
  rec.rl = spec.rl;
  if (uses_q(spec.agent)) rec.q = spec.q.value_or(kDefaultQ);
  rec.seed = spec.seed;
  rec.episode = episode;

  SearchConfig cfg;
  cfg.estimator = estimator_for(spec.agent, rec.q.value_or(kDefaultQ));
  cfg.exploration = spec.c;
  cfg.rollout_length = spec.rl;
  cfg.budget = spec.budget;

  const RandomSource stream(episode_seed(spec.seed, episode));
  RandomSource world = stream.derive(0);
  std::unique_ptr<State> state = env->initial_state();
  while (!env->is_terminal(*state)) {
    if (rec.decisions >= kMaxDecisions) {
      throw InvalidState("episode exceeded the decision limit");
    }
    cfg.seed = stream.derive(static_cast<std::uint64_t>(rec.decisions) + 1).seed();
    MeteredModel model(*env, spec.budget);
    const SearchResult result = spec.agent == AgentKind::kPbMcts
                                    ? run_search_pb(model, *state, cfg)
                                    : run_search(model, *state, cfg);
    rec.fm_calls += model.calls_used();
    if (trace) {
      trace->calls_per_decision.push_back(model.calls_used());
      trace->actions.push_back(result.action);
    }
    state = env->transition(*state, result.action, world);
    ++rec.decisions;
  }
  const Outcome final_outcome = env->outcome(*state);
  rec.win = final_outcome.status() == GameStatus::kWon;
  rec.score = final_outcome.score();
  if (spec.timing) {
    rec.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  }
  return rec;
}

std::vector<RunRecord> run_spec(const RunSpec& spec) {
  validate(spec);
  std::vector<RunRecord> out;
  out.reserve(static_cast<std::size_t>(spec.repetitions));
  for (int e = 0; e < spec.repetitions; ++e) out.push_back(run_episode(spec, e));
  return out;
}

std::vector<double> default_c_grid() {
  std::vector<double> c;
  for (int i = 0; i <= 8; ++i) c.push_back(0.25 * i);
  return c;
}

std::vector<int> default_rl_grid() { return {5, 10, 25, 50}; }

std::vector<std::int64_t> default_budgets() { return {250, 500, 1000, 10000}; }

std::vector<RunSpec> expand_grid(const SweepGrid& grid) {
  if (grid.games.empty()) throw ConfigError("sweep has no games");
  if (grid.budgets.empty()) throw ConfigError("sweep has no budgets");
  if (grid.agents.empty()) throw ConfigError("sweep has no agents");
  if (grid.c_values.empty()) throw ConfigError("sweep has no C values");
  if (grid.rl_values.empty()) throw ConfigError("sweep has no RL values");
  if (grid.repetitions < 1) throw ConfigError("sweep repetitions must be >= 1");

  const RandomSource master(grid.seed);
  std::vector<RunSpec> specs;
  for (const auto& game : grid.games) {
    for (const auto budget : grid.budgets) {
      for (const auto agent : grid.agents) {
        for (const double c : grid.c_values) {
          for (const int rl : grid.rl_values) {
            RunSpec s;
            s.game = game;
            s.agent = agent;
            s.c = c;
            s.rl = rl;
            if (uses_q(agent)) s.q = grid.q;
            s.budget = budget;
            s.repetitions = grid.repetitions;
            s.seed = master.derive(specs.size() + 1).seed();
            s.timing = grid.timing;
            validate(s);
            specs.push_back(std::move(s));
          }
        }
      }
    }
  }
  return specs;
}

std::vector<RunRecord> run_matrix(const SweepGrid& grid,
                                  const std::function<void(const RunRecord&)>& sink) {
  const std::vector<RunSpec> specs = expand_grid(grid);
  const std::size_t reps = static_cast<std::size_t>(grid.repetitions);
  const std::size_t total = specs.size() * reps;

  std::vector<std::optional<RunRecord>> slots(total);
  std::vector<RunRecord> records;
  records.reserve(total);
  std::mutex mu;
  std::size_t next_emit = 0;
  std::atomic<std::size_t> next_job{0};

  auto work = [&] {
    for (;;) {
      const std::size_t job = next_job.fetch_add(1);
      if (job >= total) return;
      const RunSpec& spec = specs[job / reps];
      const int episode = static_cast<int>(job % reps);
      RunRecord rec;
      try {
        rec = run_episode(spec, episode);
      } catch (const std::exception& ex) {
        rec = RunRecord{};
        rec.game = spec.game;
        rec.agent = std::string(to_string(spec.agent));
        rec.budget = spec.budget;
        rec.c = spec.c;
        rec.rl = spec.rl;
        rec.q = spec.q;
        rec.seed = spec.seed;
        rec.episode = episode;
        rec.error = ex.what();
      }
      std::lock_guard<std::mutex> lock(mu);
      slots[job] = std::move(rec);
      while (next_emit < total && slots[next_emit]) {
        if (sink) sink(*slots[next_emit]);
        records.push_back(std::move(*slots[next_emit]));
        slots[next_emit].reset();
        ++next_emit;
      }
    }
  };

  const int threads = std::max(1, grid.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return records;
}

}  // namespace omcts::bench
