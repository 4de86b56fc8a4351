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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "omcts/bench/aggregate.hpp"
#include "omcts/bench/io.hpp"
#include "omcts/bench/rank_tests.hpp"
#include "omcts/bench/runner.hpp"
#include "omcts/bench/sweep_config.hpp"
#include "omcts/errors.hpp"
#include "omcts/games/registry.hpp"

namespace {

using namespace omcts::bench;

struct RunOptions {
  std::string game = "gapworld";
  std::string agent = "O-MCTS";
  std::int64_t budget = 1000;
  double c = 1.25;
  int rl = 5;
  std::optional<double> q;
  std::uint64_t seed = 0;
  int reps = 1;
  std::string format = "csv";
  std::string out;
  bool timing = false;
};

struct SweepOptions {
  std::string config;
  std::string out;
  std::string format = "csv";
  std::optional<int> threads;
  std::optional<int> reps;
  std::optional<std::uint64_t> seed;
};

struct AnalyzeOptions {
  std::string input;
  std::string table_csv;
  double alpha = 0.01;
  bool configs = false;
};

int do_run(const RunOptions& opt) {
  RunSpec spec;
  spec.game = opt.game;
  spec.agent = parse_agent(opt.agent);
  spec.budget = opt.budget;
  spec.c = opt.c;
  spec.rl = opt.rl;
  spec.q = opt.q;
  if (uses_q(spec.agent) && !spec.q) spec.q = kDefaultQ;
  spec.seed = opt.seed;
  spec.repetitions = opt.reps;
  spec.timing = opt.timing;
  const auto records = run_spec(spec);
  write_records(records, parse_format(opt.format), opt.out);
  return 0;
}

int do_sweep(const SweepOptions& opt) {
  SweepGrid grid = load_sweep_config(opt.config);
  if (opt.threads) grid.threads = *opt.threads;
  if (opt.reps) grid.repetitions = *opt.reps;
  if (opt.seed) grid.seed = *opt.seed;
  const Format format = parse_format(opt.format);

  if (format == Format::kJson) {
    const auto records = run_matrix(grid);
    write_records(records, format, opt.out);
    return 0;
  }
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opt.out.empty() && opt.out != "-") {
    file.open(opt.out, std::ios::binary);
    if (!file) throw omcts::IoError("cannot open " + opt.out + " for writing");
    out = &file;
  }
  write_csv_header(*out);
  run_matrix(grid, [out](const RunRecord& r) {
    write_csv_row(*out, r);
    out->flush();
  });
  if (!*out) throw omcts::IoError("write failed");
  return 0;
}

void print_pairwise(const RankTable& table, double alpha) {
  const std::size_t k = table.algorithms.size();
  std::cout << "pairwise Wilcoxon signed-rank on per-problem ranks (alpha " << alpha
            << ")\n";
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::vector<double> x;
      std::vector<double> y;
      for (const auto& row : table.ranks) {
        x.push_back(row[a]);
        y.push_back(row[b]);
      }
      std::cout << "  " << table.algorithms[a] << " vs " << table.algorithms[b] << ": ";
      try {
        const auto w = wilcoxon_signed_rank(x, y);
        std::cout << "W+ = " << w.w_plus << ", n = " << w.n << ", p = " << w.p_value
                  << (w.exact ? " (exact)" : " (normal)")
                  << (w.p_value < alpha ? " *" : "") << '\n';
      } catch (const omcts::DegenerateInput&) {
        std::cout << "identical ranks\n";
      }
    }
  }
}

int do_analyze(const AnalyzeOptions& opt) {
  const auto records = read_csv_file(opt.input);
  const auto cells = aggregate(records);
  const RankTable table =
      rank_algorithms(opt.configs ? per_configuration(cells) : best_per_agent(cells));

  write_rank_table_text(std::cout, table);
  if (!opt.table_csv.empty()) {
    std::ofstream out(opt.table_csv, std::ios::binary);
    if (!out) throw omcts::IoError("cannot open " + opt.table_csv + " for writing");
    write_rank_table_csv(out, table);
  }
  if (table.problems.size() < 2 || table.algorithms.size() < 2) {
    std::cout << "significance tests need at least 2 problems and 2 algorithms\n";
    return 0;
  }
  write_friedman_text(std::cout, friedman_test(table.ranks), opt.alpha);
  print_pairwise(table, opt.alpha);
  return 0;
}

int do_list() {
  std::cout << "games:\n";
  for (const auto& g : omcts::games::list_games()) {
    std::cout << "  " << g.name << "  " << g.summary << "\n      keys: " << g.parameters
              << '\n';
  }
  std::cout << "agents:\n";
  for (const AgentKind kind : kAllAgents) {
    std::cout << "  " << to_string(kind) << "  " << describe(kind) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal Monte Carlo tree search benchmarks"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "play episodes of one agent configuration");
  run_cmd->add_option("--game", run.game, "game config, e.g. gapworld:p=0.9")
      ->capture_default_str();
  run_cmd->add_option("--agent", run.agent, "MCTS, O-MCTS, N-MCTS, MixMax or PB-MCTS")
      ->capture_default_str();
  run_cmd->add_option("--budget", run.budget, "forward model calls per decision")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--c", run.c, "exploration constant")->capture_default_str();
  run_cmd->add_option("--rl", run.rl, "rollout length")->capture_default_str();
  run_cmd->add_option("--q", run.q, "MixMax weight (default 0.25)");
  run_cmd->add_option("--seed", run.seed, "master seed")->capture_default_str();
  run_cmd->add_option("--reps", run.reps, "episodes")->capture_default_str();
  run_cmd->add_option("--format", run.format, "csv or json")->capture_default_str();
  run_cmd->add_option("--out", run.out, "output file (default stdout)");
  run_cmd->add_flag("--timing", run.timing, "record wall time per episode");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter grid from a config file");
  sweep_cmd->add_option("config", sweep.config, "sweep config file")
      ->required()
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--out", sweep.out, "output file (default stdout)");
  sweep_cmd->add_option("--format", sweep.format, "csv or json")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads");
  sweep_cmd->add_option("--reps", sweep.reps, "override repetitions");
  sweep_cmd->add_option("--seed", sweep.seed, "override master seed");

  AnalyzeOptions analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "rank tables and significance tests from a CSV");
  analyze_cmd->add_option("input", analyze.input, "records CSV")
      ->required()
      ->check(CLI::ExistingFile);
  analyze_cmd->add_option("--table-csv", analyze.table_csv, "also write the rank table");
  analyze_cmd->add_option("--alpha", analyze.alpha, "significance level")
      ->capture_default_str();
  analyze_cmd->add_flag("--configs", analyze.configs,
                        "rank every configuration instead of each agent's best");

  auto* list_cmd = app.add_subcommand("list", "list games and agents");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return do_run(run);
    if (*sweep_cmd) return do_sweep(sweep);
    if (*analyze_cmd) return do_analyze(analyze);
    if (*list_cmd) return do_list();
  } catch (const omcts::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
