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
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "omcts/errors.hpp"
#include "omcts/outcome_table.hpp"
#include "omcts/random.hpp"
#include "oracles/borda_oracle.hpp"

namespace omcts {
namespace {

Outcome playing(double score) { return Outcome(GameStatus::kPlaying, score); }

OutcomeTable example_table() {
  OutcomeTable t({0, 1});
  for (const double s : {0.1, 1.0, 0.1}) t.record(0, playing(s));
  for (const double s : {0.3, 0.35, 0.25}) t.record(1, playing(s));
  return t;
}

TEST(OutcomeTable, SingleSample) {
  OutcomeTable t({3, 5});
  t.record(3, playing(2.0));
  EXPECT_EQ(t.visits(3), 1);
  EXPECT_EQ(t.total(), 1);
  EXPECT_DOUBLE_EQ(t.prob_of(playing(2.0), 3), 1.0);
  EXPECT_THROW(t.prob_of(playing(2.0), 5), NoSamples);
  EXPECT_THROW(t.record(4, playing(1.0)), UnknownAction);
}

TEST(OutcomeTable, ProbabilitiesFromCounts) {
  const OutcomeTable t = example_table();
  EXPECT_DOUBLE_EQ(t.prob_of(playing(0.1), 0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.prob_of(playing(0.3), 0), 0.0);
  EXPECT_DOUBLE_EQ(t.prob_below(playing(1.0), 0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.prob_below(playing(0.1), 0), 0.0);
  EXPECT_DOUBLE_EQ(t.prob_below(playing(5.0), 0), 1.0);
  EXPECT_EQ(t.count(playing(0.1), 0), 2);
  EXPECT_EQ(t.count_below(playing(0.35), 1), 2);
  EXPECT_EQ(t.distinct_outcomes(0), 2U);
}

TEST(OutcomeTable, WorkedExampleFromSamples) {
  const OutcomeTable t = example_table();
  EXPECT_NEAR(t.pref_prob(0, 1), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(t.pref_prob(1, 0), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(t.borda_score(0), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(t.borda_score(1), 2.0 / 3.0, 1e-12);
  EXPECT_THROW(t.pref_prob(0, 0), SameAction);
}

TEST(OutcomeTable, IdenticalSamplesTie) {
  OutcomeTable t({0, 1, 2});
  for (int a = 0; a < 3; ++a) {
    for (const double s : {1.0, 2.0, 2.0, 7.0}) t.record(a, playing(s));
  }
  EXPECT_DOUBLE_EQ(t.pref_prob(0, 1), 0.5);
  for (int a = 0; a < 3; ++a) EXPECT_DOUBLE_EQ(t.borda_score(a), 0.5);
}

TEST(OutcomeTable, DominanceGivesExtremeScores) {
  OutcomeTable t({0, 1, 2});
  t.record(0, playing(1.0));
  t.record(0, playing(2.0));
  t.record(1, playing(3.0));
  t.record(2, Outcome(GameStatus::kWon, 0.0));
  t.record(1, playing(5.0));
  EXPECT_DOUBLE_EQ(t.borda_score(0), 0.0);
  EXPECT_DOUBLE_EQ(t.borda_score(2), 1.0);
  EXPECT_DOUBLE_EQ(t.pref_prob(1, 0), 1.0);
}

TEST(OutcomeTable, SingleActionScoresOne) {
  OutcomeTable t({4});
  t.record(4, playing(0.0));
  EXPECT_DOUBLE_EQ(t.borda_score(4), 1.0);
}

TEST(OutcomeTable, BordaNeedsEverySampled) {
  OutcomeTable t({0, 1});
  t.record(0, playing(0.0));
  EXPECT_THROW(t.borda_score(0), NoSamples);
}

TEST(OutcomeTable, RejectsDuplicateActions) {
  EXPECT_THROW(OutcomeTable({1, 1}), UnknownAction);
}

// Random tables: samples per action drawn from a small ordinal set.
struct RandomTable {
  std::vector<std::vector<Outcome>> samples;
  OutcomeTable table{{}};
};

RandomTable random_table(RandomSource& rng, int actions, int ordinals, int records,
                         const std::function<double(double)>& transform = nullptr) {
  std::vector<ActionId> ids;
  for (int a = 0; a < actions; ++a) ids.push_back(a * 3 + 1);
  RandomTable out{std::vector<std::vector<Outcome>>(actions), OutcomeTable(ids)};
  const auto draw = [&](int a) {
    const int k = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(ordinals)));
    const auto status = static_cast<GameStatus>(k % 3);
    double score = k / 3;
    if (transform) score = transform(score);
    const Outcome o(status, score);
    out.samples[a].push_back(o);
    out.table.record(ids[a], o);
  };
  for (int a = 0; a < actions; ++a) draw(a);
  for (int i = actions; i < records; ++i) draw(static_cast<int>(rng.uniform_index(actions)));
  return out;
}

TEST(OutcomeTableProperty, IncrementalMatchesBatch) {
  RandomSource rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = random_table(rng, 4, 6, 5 + static_cast<int>(rng.uniform_index(60)));
    const auto ids = t.table.actions();
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = 0; b < ids.size(); ++b) {
        if (a == b) continue;
        EXPECT_NEAR(t.table.pref_prob(ids[a], ids[b]),
                    oracle::pairwise_beat(t.samples[a], t.samples[b]), 1e-9);
      }
      EXPECT_NEAR(t.table.borda_score(ids[a]), oracle::batch_borda(t.samples, a), 1e-9);
    }
  }
}

TEST(OutcomeTableProperty, PairwiseSumsToHalfOfPairs) {
  RandomSource rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng.uniform_index(4));
    const auto t = random_table(rng, k, 8, k + static_cast<int>(rng.uniform_index(30)));
    double sum = 0.0;
    for (const ActionId a : t.table.actions()) {
      for (const ActionId b : t.table.actions()) {
        if (a != b) sum += t.table.pref_prob(a, b);
      }
    }
    EXPECT_NEAR(sum, k * (k - 1) / 2.0, 1e-9);
  }
}

TEST(OutcomeTableProperty, OrdinalInvariance) {
  const std::vector<std::function<double(double)>> transforms = {
      [](double x) { return x * x * x; },
      [](double x) { return std::exp(x); },
      [](double x) { return 10.0 * x - 4.0; },
  };
  for (const auto& f : transforms) {
    RandomSource r1(13);
    RandomSource r2(13);
    for (int trial = 0; trial < 100; ++trial) {
      const auto plain = random_table(r1, 3, 9, 25);
      const auto mapped = random_table(r2, 3, 9, 25, f);
      for (const ActionId a : plain.table.actions()) {
        EXPECT_DOUBLE_EQ(plain.table.borda_score(a), mapped.table.borda_score(a));
        for (const ActionId b : plain.table.actions()) {
          if (a != b) {
            EXPECT_DOUBLE_EQ(plain.table.pref_prob(a, b), mapped.table.pref_prob(a, b));
          }
        }
      }
    }
  }
}

TEST(OutcomeTableProperty, CountsAddUp) {
  RandomSource rng(14);
  const auto t = random_table(rng, 5, 8, 300);
  std::int64_t total = 0;
  for (std::size_t a = 0; a < t.samples.size(); ++a) {
    const ActionId id = t.table.actions()[a];
    EXPECT_EQ(t.table.visits(id), static_cast<std::int64_t>(t.samples[a].size()));
    double mass = 0.0;
    for (const auto& o : t.samples[a]) mass += t.table.prob_of(o, id) / t.table.count(o, id);
    EXPECT_NEAR(mass, 1.0, 1e-12);
    total += t.table.visits(id);
  }
  EXPECT_EQ(total, t.table.total());
}

}  // namespace
}  // namespace omcts
