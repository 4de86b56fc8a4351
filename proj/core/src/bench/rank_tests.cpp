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

#include "omcts/bench/rank_tests.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "omcts/errors.hpp"

namespace omcts::bench {
namespace {

// Twice the midranks of |values|, as integers.
std::vector<long> doubled_midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<long> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share rank ((i+1) + (j+1)) / 2
    const long doubled = static_cast<long>(i + j + 2);
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = doubled;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
  const auto doubled = doubled_midranks(values);
  std::vector<double> out(doubled.size());
  for (std::size_t i = 0; i < doubled.size(); ++i) out[i] = doubled[i] / 2.0;
  return out;
}

FriedmanResult friedman_test(const std::vector<std::vector<double>>& blocks) {
  const std::size_t n = blocks.size();
  if (n < 2) throw DegenerateInput("Friedman test needs at least 2 blocks");
  const std::size_t k = blocks.front().size();
  if (k < 2) throw DegenerateInput("Friedman test needs at least 2 treatments");

  std::vector<double> rank_sums(k, 0.0);
  for (const auto& row : blocks) {
    if (row.size() != k) throw DegenerateInput("ragged Friedman matrix");
    for (const double v : row) {
      if (!std::isfinite(v)) throw DegenerateInput("non-finite Friedman value");
    }
    const auto r = midranks(row);
    for (std::size_t j = 0; j < k; ++j) rank_sums[j] += r[j];
  }

  FriedmanResult out;
  out.df = static_cast<int>(k) - 1;
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  double sum_sq = 0.0;
  for (const double s : rank_sums) {
    out.mean_ranks.push_back(s / nn);
    sum_sq += (s / nn) * (s / nn);
  }
  const double stat =
      12.0 * nn / (kk * (kk + 1.0)) * (sum_sq - kk * (kk + 1.0) * (kk + 1.0) / 4.0);
  // Rounding can leave a tiny negative value when all mean ranks are equal.
  out.statistic = std::max(0.0, stat);
  out.p_value = out.statistic > 0.0
                    ? boost::math::gamma_q(out.df / 2.0, out.statistic / 2.0)
                    : 1.0;
  return out;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y) {
  if (x.size() != y.size()) throw DegenerateInput("paired samples differ in length");
  std::vector<double> magnitude;
  std::vector<bool> positive;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (!std::isfinite(d)) throw DegenerateInput("non-finite paired value");
    if (d == 0.0) continue;
    magnitude.push_back(std::abs(d));
    positive.push_back(d > 0.0);
  }
  if (magnitude.empty()) throw DegenerateInput("all paired differences are zero");

  const auto doubled = doubled_midranks(magnitude);
  const std::size_t n = magnitude.size();
  long w_plus2 = 0;
  long total2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total2 += doubled[i];
    if (positive[i]) w_plus2 += doubled[i];
  }

  WilcoxonResult out;
  out.n = static_cast<int>(n);
  out.w_plus = w_plus2 / 2.0;
  out.w_minus = (total2 - w_plus2) / 2.0;

  if (out.n <= kWilcoxonExactLimit) {
    // Null distribution of 2*W+: each rank joins the positive side with
    // probability 1/2, independently.
    std::vector<double> ways(static_cast<std::size_t>(total2) + 1, 0.0);
    ways[0] = 1.0;
    long reach = 0;
    for (const long r : doubled) {
      for (long s = reach; s >= 0; --s) ways[static_cast<std::size_t>(s + r)] += ways[static_cast<std::size_t>(s)];
      reach += r;
    }
    const double all = std::ldexp(1.0, out.n);
    double lower = 0.0;
    double upper = 0.0;
    for (long s = 0; s <= total2; ++s) {
      if (s <= w_plus2) lower += ways[static_cast<std::size_t>(s)];
      if (s >= w_plus2) upper += ways[static_cast<std::size_t>(s)];
    }
    out.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / all);
    out.exact = true;
    return out;
  }

  const double nn = static_cast<double>(n);
  const double mean = nn * (nn + 1.0) / 4.0;
  double tie_term = 0.0;
  {
    std::vector<long> sorted = doubled;
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i);
      tie_term += t * t * t - t;
      i = j;
    }
  }
  const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
  const double z = (out.w_plus - mean) / std::sqrt(var);
  out.p_value = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
  return out;
}

}  // namespace omcts::bench
