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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "omcts/bench/aggregate.hpp"
#include "omcts/bench/rank_tests.hpp"
#include "omcts/errors.hpp"
#include "omcts/random.hpp"
#include "oracles/rank_oracles.hpp"

namespace omcts::bench {
namespace {

TEST(Midranks, TiesShareMean) {
  const std::vector<double> v{3.0, 1.0, 3.0, 2.0, 3.0};
  EXPECT_EQ(midranks(v), (std::vector<double>{4.0, 1.0, 4.0, 2.0, 4.0}));
}

TEST(Wilcoxon, AllPositiveSix) {
  const std::vector<double> x{1.1, 2.2, 3.3, 4.4, 5.5, 6.6};
  const std::vector<double> y(6, 0.0);
  const auto w = wilcoxon_signed_rank(x, y);
  EXPECT_DOUBLE_EQ(w.w_plus, 21.0);
  EXPECT_DOUBLE_EQ(w.w_minus, 0.0);
  EXPECT_EQ(w.n, 6);
  EXPECT_TRUE(w.exact);
  EXPECT_DOUBLE_EQ(w.p_value, 0.03125);
}

TEST(Wilcoxon, ZerosDroppedAndErrors) {
  const std::vector<double> x{1.0, 2.0, 5.0};
  const std::vector<double> y{1.0, 1.0, 1.0};
  const auto w = wilcoxon_signed_rank(x, y);
  EXPECT_EQ(w.n, 2);
  EXPECT_DOUBLE_EQ(w.w_plus, 3.0);
  EXPECT_THROW(wilcoxon_signed_rank(y, y), DegenerateInput);
  const std::vector<double> shorter{1.0};
  EXPECT_THROW(wilcoxon_signed_rank(x, shorter), DegenerateInput);
}

TEST(Wilcoxon, MatchesEnumerationOnRandomFixtures) {
  RandomSource rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.uniform_index(8);
    std::vector<double> x(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Coarse values force ties and zero differences.
      x[i] = static_cast<double>(rng.uniform_index(5));
      y[i] = static_cast<double>(rng.uniform_index(5));
    }
    const auto brute = oracle::wilcoxon_enumerate(x, y);
    if (brute.n == 0) {
      EXPECT_THROW(wilcoxon_signed_rank(x, y), DegenerateInput);
      continue;
    }
    const auto w = wilcoxon_signed_rank(x, y);
    EXPECT_EQ(w.n, brute.n);
    EXPECT_DOUBLE_EQ(w.w_plus, brute.w_plus);
    EXPECT_NEAR(w.p_value, brute.p_two_sided, 1e-12);
  }
}

TEST(Wilcoxon, NormalApproximationAboveTwenty) {
  std::vector<double> x;
  std::vector<double> y;
  for (int i = 1; i <= 30; ++i) {
    x.push_back(i % 3 == 0 ? -i : i);
    y.push_back(0.0);
  }
  const auto w = wilcoxon_signed_rank(x, y);
  EXPECT_FALSE(w.exact);
  EXPECT_EQ(w.n, 30);
  // W+ = 465 - 165 = 300, mean 232.5, sd sqrt(30*31*61/24) = 48.62
  EXPECT_DOUBLE_EQ(w.w_plus, 300.0);
  const double z = (300.0 - 232.5) / std::sqrt(30.0 * 31.0 * 61.0 / 24.0);
  EXPECT_NEAR(w.p_value, std::erfc(z / std::sqrt(2.0)), 1e-12);
}

TEST(Wilcoxon, ExactAtTwentyMatchesSymmetry) {
  std::vector<double> x;
  std::vector<double> y(20, 0.0);
  for (int i = 1; i <= 20; ++i) x.push_back(i % 2 == 0 ? i : -i);
  const auto w = wilcoxon_signed_rank(x, y);
  EXPECT_TRUE(w.exact);
  const auto flipped = wilcoxon_signed_rank(y, x);
  EXPECT_DOUBLE_EQ(w.p_value, flipped.p_value);
  EXPECT_DOUBLE_EQ(w.w_plus, flipped.w_minus);
}

TEST(Friedman, IdenticalColumnsGiveZero) {
  const std::vector<std::vector<double>> m{{1, 1, 1}, {2, 2, 2}, {5, 5, 5}};
  const auto f = friedman_test(m);
  EXPECT_DOUBLE_EQ(f.statistic, 0.0);
  EXPECT_DOUBLE_EQ(f.p_value, 1.0);
  EXPECT_EQ(f.df, 2);
}

TEST(Friedman, ThreeByFourFixture) {
  // 4 blocks x 3 treatments; the third treatment always best.
  const std::vector<std::vector<double>> m{
      {1.0, 2.0, 3.0}, {2.0, 1.0, 3.0}, {1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}};
  const auto f = friedman_test(m);
  EXPECT_NEAR(f.statistic, oracle::friedman_brute(m), 1e-12);
  EXPECT_NEAR(f.statistic, 6.5, 1e-12);
  EXPECT_NEAR(f.p_value, std::exp(-6.5 / 2.0), 1e-12);
  EXPECT_EQ(f.mean_ranks, (std::vector<double>{1.25, 1.75, 3.0}));
}

TEST(Friedman, MatchesBruteForceOnRandomFixtures) {
  RandomSource rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.uniform_index(7);
    const std::size_t k = 2 + rng.uniform_index(5);
    std::vector<std::vector<double>> m(n, std::vector<double>(k));
    for (auto& row : m) {
      for (auto& v : row) v = static_cast<double>(rng.uniform_index(4));
    }
    const auto f = friedman_test(m);
    EXPECT_NEAR(f.statistic, std::max(0.0, oracle::friedman_brute(m)), 1e-9);
    EXPECT_NEAR(f.p_value, oracle::chi2_survival(f.statistic, static_cast<int>(k) - 1), 1e-9);
  }
}

TEST(Friedman, Errors) {
  EXPECT_THROW(friedman_test({{1.0, 2.0}}), DegenerateInput);
  EXPECT_THROW(friedman_test({{1.0}, {2.0}}), DegenerateInput);
  EXPECT_THROW(friedman_test({{1.0, 2.0}, {1.0}}), DegenerateInput);
}

RunRecord rec(const std::string& game, std::int64_t budget, const std::string& agent,
              bool win, double score, double c = 1.0) {
  RunRecord r;
  r.game = game;
  r.budget = budget;
  r.agent = agent;
  r.c = c;
  r.rl = 5;
  r.win = win;
  r.score = score;
  return r;
}

TEST(Aggregate, WinRateAndMeanScore) {
  std::vector<RunRecord> rs;
  for (const bool w : {true, true, false, true}) rs.push_back(rec("g", 250, "A", w, w ? 4.0 : 0.0));
  const auto cells = aggregate(rs);
  ASSERT_EQ(cells.size(), 1U);
  const auto& cell = cells.begin()->second;
  EXPECT_DOUBLE_EQ(cell.win_rate, 0.75);
  EXPECT_DOUBLE_EQ(cell.mean_score, 3.0);
  EXPECT_EQ(cell.episodes, 4);
}

TEST(Aggregate, AllFailedCellIsEmpty) {
  auto r = rec("g", 250, "A", true, 1.0);
  r.error = "boom";
  const std::vector<RunRecord> rs{r};
  EXPECT_THROW(aggregate(rs), EmptyCell);
}

TEST(Aggregate, BestPerAgentUsesLexicographicOrder) {
  std::vector<RunRecord> rs{rec("g", 250, "A", false, 9.0, 0.0), rec("g", 250, "A", true, 1.0, 1.0),
                            rec("g", 250, "B", false, 2.0, 0.0)};
  const auto table = best_per_agent(aggregate(rs));
  const auto& row = table.at(Problem{"g", 250});
  EXPECT_DOUBLE_EQ(row.at("A").win_rate, 1.0);
  EXPECT_DOUBLE_EQ(row.at("A").mean_score, 1.0);
}

TEST(RankAlgorithms, MidranksOnTies) {
  ProblemTable t;
  t[{"g", 250}] = {{"A", {0.5, 2.0}}, {"B", {0.5, 2.0}}, {"C", {0.1, 9.0}}};
  const auto ranks = rank_algorithms(t);
  EXPECT_EQ(ranks.algorithms, (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(ranks.ranks[0], (std::vector<double>{1.5, 1.5, 3.0}));
}

TEST(RankAlgorithms, HandRankedFixture) {
  // 3 algorithms x 4 problems, ranked by hand:
  //   p1: A > B > C      -> 1 2 3
  //   p2: C > A = B      -> 2.5 2.5 1   (A and B tie on both metrics)
  //   p3: B > A > C (A, C same win rate, A higher score) -> 2 1 3
  //   p4: A > C > B      -> 1 3 2
  ProblemTable t;
  t[{"g", 1}] = {{"A", {0.9, 1.0}}, {"B", {0.5, 5.0}}, {"C", {0.1, 9.0}}};
  t[{"g", 2}] = {{"A", {0.4, 3.0}}, {"B", {0.4, 3.0}}, {"C", {0.6, 0.0}}};
  t[{"g", 3}] = {{"A", {0.2, 4.0}}, {"B", {0.3, 0.0}}, {"C", {0.2, 1.0}}};
  t[{"h", 1}] = {{"A", {1.0, 1.0}}, {"B", {0.0, 7.0}}, {"C", {0.0, 8.0}}};
  const auto r = rank_algorithms(t);
  EXPECT_DOUBLE_EQ(r.average_rank[0], (1 + 2.5 + 2 + 1) / 4.0);
  EXPECT_DOUBLE_EQ(r.average_rank[1], (2 + 2.5 + 1 + 3) / 4.0);
  EXPECT_DOUBLE_EQ(r.average_rank[2], (3 + 1 + 3 + 2) / 4.0);
  for (const auto& row : r.ranks) {
    double sum = 0.0;
    for (const double x : row) sum += x;
    EXPECT_DOUBLE_EQ(sum, 6.0);
  }
}

TEST(RankAlgorithms, ScaleInvariant) {
  RandomSource rng(33);
  ProblemTable t;
  ProblemTable scaled;
  for (int p = 0; p < 6; ++p) {
    for (const char* name : {"A", "B", "C", "D"}) {
      const double wr = rng.uniform_index(3) / 2.0;
      const double sc = static_cast<double>(rng.uniform_index(4));
      t[{"g", p}][name] = {wr, sc};
      scaled[{"g", p}][name] = {wr, 3.7 * sc};
    }
  }
  const auto a = rank_algorithms(t);
  const auto b = rank_algorithms(scaled);
  EXPECT_EQ(a.ranks, b.ranks);
  EXPECT_EQ(a.average_rank, b.average_rank);
}

TEST(RankAlgorithms, MissingCell) {
  ProblemTable t;
  t[{"g", 1}] = {{"A", {0.9, 1.0}}, {"B", {0.5, 5.0}}};
  t[{"g", 2}] = {{"A", {0.4, 3.0}}};
  EXPECT_THROW(rank_algorithms(t), EmptyCell);
  EXPECT_THROW(rank_algorithms(ProblemTable{}), EmptyCell);
}

}  // namespace
}  // namespace omcts::bench
