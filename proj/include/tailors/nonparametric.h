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

// Rank-based tests: Kruskal-Wallis H and the Wilcoxon signed-rank test.

#ifndef TAILORS_NONPARAMETRIC_H_
#define TAILORS_NONPARAMETRIC_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tailors {

enum class TestMethod { kKruskalWallis, kWilcoxonSignedRank };

struct TestResult {
  TestMethod method = TestMethod::kKruskalWallis;
  // H for Kruskal-Wallis, min(W+, W-) for Wilcoxon.
  double statistic = 0.0;
  double p_value = 1.0;
  // Pooled sample size, or the number of nonzero differences.
  std::size_t n = 0;
  // Wilcoxon only.
  double w_plus = 0.0;
  double w_minus = 0.0;
  bool exact = false;
};

// Average ranks (1-based) with ties sharing their midrank.
std::vector<double> MidRanks(std::span<const double> values);

// H on midranks divided by the tie correction 1 - sum(t^3 - t)/(N^3 - N);
// p from the chi-square upper tail with (groups - 1) df. When every pooled
// value is equal, H = 0 and p = 1. Throws Error{kDegenerateInput} for fewer
// than two groups, an empty group, or N < 3.
TestResult KruskalWallis(std::span<const std::vector<double>> groups);

struct WilcoxonOptions {
  // Exact enumeration up to this many nonzero differences, normal
  // approximation beyond.
  std::size_t exact_max_n = 25;
};

// Two-sided test on d = x - y. Zero differences are dropped and tied |d| get
// midranks. Exact p = P(min(W+, W-) <= observed) over all 2^n sign patterns;
// otherwise a normal approximation with tie and continuity corrections.
// Throws Error{kAllZeroDifferences}.
TestResult WilcoxonSignedRank(std::span<const std::pair<double, double>> pairs,
                              const WilcoxonOptions& options = {});

}  // namespace tailors

#endif  // TAILORS_NONPARAMETRIC_H_
