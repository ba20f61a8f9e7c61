// Copyright 2026 The Tailors Authors. All Rights Reserved.
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

#include "tailors/nonparametric.h"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tailors/error.h"

namespace tailors {

namespace {

// Keeps reported p-values inside (0, 1].
double ClampP(double p) {
  return std::clamp(p, std::numeric_limits<double>::min(), 1.0);
}

// Sum over tie groups of (t^3 - t).
double TieSum(std::vector<double> sorted) {
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    sum += t * t * t - t;
    i = j;
  }
  return sum;
}

}  // namespace

std::vector<double> MidRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 hold ranks i+1..j.
    const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mid;
    i = j;
  }
  return ranks;
}

TestResult KruskalWallis(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw Error(ErrorKind::kDegenerateInput, "need at least two groups");
  std::vector<double> pooled;
  for (const auto& g : groups) {
    if (g.empty()) throw Error(ErrorKind::kDegenerateInput, "empty group");
    pooled.insert(pooled.end(), g.begin(), g.end());
  }
  const double n = static_cast<double>(pooled.size());
  if (pooled.size() < 3) throw Error(ErrorKind::kDegenerateInput, "need N >= 3");

  TestResult result;
  result.method = TestMethod::kKruskalWallis;
  result.n = pooled.size();
  const double correction = 1.0 - TieSum(pooled) / (n * n * n - n);
  if (correction <= 0.0) {
    result.statistic = 0.0;
    result.p_value = 1.0;
    return result;
  }
  const std::vector<double> ranks = MidRanks(pooled);
  double sum = 0.0;
  std::size_t offset = 0;
  for (const auto& g : groups) {
    const double r = std::accumulate(ranks.begin() + offset, ranks.begin() + offset + g.size(), 0.0);
    sum += r * r / static_cast<double>(g.size());
    offset += g.size();
  }
  const double h = (12.0 / (n * (n + 1.0)) * sum - 3.0 * (n + 1.0)) / correction;
  result.statistic = std::max(h, 0.0);
  const boost::math::chi_squared dist(static_cast<double>(groups.size() - 1));
  result.p_value = ClampP(boost::math::cdf(boost::math::complement(dist, result.statistic)));
  return result;
}

TestResult WilcoxonSignedRank(std::span<const std::pair<double, double>> pairs,
                              const WilcoxonOptions& options) {
  std::vector<double> diffs;
  for (const auto& [x, y] : pairs) {
    if (x != y) diffs.push_back(x - y);
  }
  if (diffs.empty()) {
    throw Error(ErrorKind::kAllZeroDifferences, "every paired difference is zero");
  }
  std::vector<double> magnitude(diffs.size());
  std::transform(diffs.begin(), diffs.end(), magnitude.begin(),
                 [](double d) { return std::abs(d); });
  const std::vector<double> ranks = MidRanks(magnitude);

  TestResult result;
  result.method = TestMethod::kWilcoxonSignedRank;
  result.n = diffs.size();
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    (diffs[i] > 0 ? result.w_plus : result.w_minus) += ranks[i];
  }
  result.statistic = std::min(result.w_plus, result.w_minus);
  const double n = static_cast<double>(result.n);

  if (result.n <= options.exact_max_n) {
    // Midranks are multiples of 1/2, so doubled ranks are exact integers and
    // the null distribution of 2*W+ can be tabulated by subset-sum counting.
    std::vector<std::size_t> doubled(ranks.size());
    std::transform(ranks.begin(), ranks.end(), doubled.begin(),
                   [](double r) { return static_cast<std::size_t>(std::llround(2.0 * r)); });
    const std::size_t total = std::accumulate(doubled.begin(), doubled.end(), std::size_t{0});
    std::vector<double> counts(total + 1, 0.0);
    counts[0] = 1.0;
    std::size_t reach = 0;
    for (std::size_t r : doubled) {
      reach += r;
      for (std::size_t s = reach; s >= r; --s) {
        counts[s] += counts[s - r];
        if (s == r) break;
      }
    }
    const auto observed = static_cast<std::size_t>(std::llround(2.0 * result.statistic));
    double tail = 0.0;
    for (std::size_t s = 0; s <= observed; ++s) tail += counts[s];
    result.p_value = ClampP(2.0 * tail / std::ldexp(1.0, static_cast<int>(result.n)));
    result.exact = true;
    return result;
  }

  const double mean = n * (n + 1.0) / 4.0;
  const double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - TieSum(magnitude) / 48.0;
  const double z = std::max(std::abs(result.w_plus - mean) - 0.5, 0.0) / std::sqrt(variance);
  result.p_value = ClampP(std::erfc(z / std::sqrt(2.0)));
  return result;
}

}  // namespace tailors
