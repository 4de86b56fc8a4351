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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace omcts::oracle {

// Rank of every value by counting: 1 + (#smaller) + (#equal others) / 2.
inline std::vector<double> counting_ranks(const std::vector<double>& v) {
  std::vector<double> r(v.size(), 1.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i == j) continue;
      if (v[j] < v[i]) r[i] += 1.0;
      if (v[j] == v[i]) r[i] += 0.5;
    }
  }
  return r;
}

struct SignedRank {
  double w_plus = 0.0;
  double p_two_sided = 1.0;
  int n = 0;
};

// Enumerates all 2^n sign assignments of the nonzero differences' ranks. The
// two-sided p-value is P(|W - n(n+1)/4| >= |w - n(n+1)/4|) under the null.
inline SignedRank wilcoxon_enumerate(const std::vector<double>& x,
                                     const std::vector<double>& y) {
  std::vector<double> mag;
  std::vector<bool> pos;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d == 0.0) continue;
    mag.push_back(std::abs(d));
    pos.push_back(d > 0.0);
  }
  SignedRank out;
  out.n = static_cast<int>(mag.size());
  const auto ranks = counting_ranks(mag);
  double total = 0.0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    total += ranks[i];
    if (pos[i]) out.w_plus += ranks[i];
  }
  const double centre = total / 2.0;
  const double observed = std::abs(out.w_plus - centre);
  const std::uint64_t masks = std::uint64_t{1} << mag.size();
  std::uint64_t extreme = 0;
  for (std::uint64_t m = 0; m < masks; ++m) {
    double w = 0.0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (m >> i & 1U) w += ranks[i];
    }
    if (std::abs(w - centre) >= observed - 1e-12) ++extreme;
  }
  out.p_two_sided = static_cast<double>(extreme) / static_cast<double>(masks);
  return out;
}

// Friedman statistic through the rank-sum form 12/(n k (k+1)) sum R_j^2 - 3n(k+1).
inline double friedman_brute(const std::vector<std::vector<double>>& blocks) {
  const double n = static_cast<double>(blocks.size());
  const std::size_t k = blocks.front().size();
  std::vector<double> sums(k, 0.0);
  for (const auto& row : blocks) {
    const auto r = counting_ranks(row);
    for (std::size_t j = 0; j < k; ++j) sums[j] += r[j];
  }
  double sq = 0.0;
  for (const double s : sums) sq += s * s;
  const double kk = static_cast<double>(k);
  return 12.0 / (n * kk * (kk + 1.0)) * sq - 3.0 * n * (kk + 1.0);
}

// Chi-square survival function by its closed forms for integer df.
inline double chi2_survival(double x, int df) {
  if (x <= 0.0) return 1.0;
  const double half = x / 2.0;
  if (df % 2 == 0) {
    double term = 1.0;
    double sum = 1.0;
    for (int i = 1; i < df / 2; ++i) {
      term *= half / i;
      sum += term;
    }
    return std::exp(-half) * sum;
  }
  double sum = 0.0;
  double term = std::sqrt(x);  // x^(i-1/2) / (1*3*...*(2i-1)) for i = 1
  for (int i = 1; i <= (df - 1) / 2; ++i) {
    sum += term;
    term *= x / (2.0 * i + 1.0);
  }
  const double pi = 3.141592653589793238462643383279502884;
  return std::erfc(std::sqrt(half)) + std::sqrt(2.0 / pi) * std::exp(-half) * sum;
}

}  // namespace omcts::oracle
