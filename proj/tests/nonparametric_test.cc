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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "stat_oracles.h"
#include "tailors/error.h"

namespace tailors {
namespace {

using testing::DirectH;
using testing::EnumerationP;
using Pairs = std::vector<std::pair<double, double>>;

Pairs FromDiffs(const std::vector<double>& d) {
  Pairs p;
  for (double v : d) p.emplace_back(v, 0.0);
  return p;
}

TEST(MidRanksTest, AveragesTies) {
  const std::vector<double> v = {10, 20, 20, 5, 20};
  EXPECT_EQ(MidRanks(v), (std::vector<double>{2, 4, 4, 1, 4}));
}

TEST(KruskalWallisTest, TwoByTwoExample) {
  const std::vector<std::vector<double>> g = {{1, 2}, {3, 4}};
  const TestResult r = KruskalWallis(g);
  EXPECT_NEAR(r.statistic, 2.4, 1e-12);
  EXPECT_NEAR(r.p_value, std::erfc(std::sqrt(2.4 / 2)), 1e-12);
  EXPECT_NEAR(r.p_value, 0.12133525, 1e-8);
  EXPECT_EQ(r.n, 4u);
}

TEST(KruskalWallisTest, IdenticalConstantGroups) {
  const std::vector<std::vector<double>> g = {{3, 3}, {3, 3, 3}, {3}};
  const TestResult r = KruskalWallis(g);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
}

TEST(KruskalWallisTest, TiedThreeGroupReference) {
  const std::vector<std::vector<double>> g = {{1, 2, 2, 5}, {3, 3, 4}, {6, 7, 2}};
  const TestResult r = KruskalWallis(g);
  EXPECT_NEAR(r.statistic, 2.596875, 1e-12);
  // Two degrees of freedom: the chi-square tail is exp(-H/2).
  EXPECT_NEAR(r.p_value, std::exp(-r.statistic / 2), 1e-12);
}

TEST(KruskalWallisTest, MatchesDirectFormulaAndMonotoneInvariance) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> val(1, 7), size(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<double>> g(2 + trial % 3);
    for (auto& grp : g) {
      grp.resize(size(rng));
      for (double& v : grp) v = val(rng);
    }
    std::size_t total = 0;
    bool all_equal = true;
    for (const auto& grp : g) {
      total += grp.size();
      for (double v : grp) all_equal &= v == g[0][0];
    }
    if (total < 3) continue;
    const TestResult r = KruskalWallis(g);
    if (all_equal) {
      EXPECT_EQ(r.statistic, 0.0);
      continue;
    }
    EXPECT_NEAR(r.statistic, DirectH(g), 1e-12);
    EXPECT_GT(r.p_value, 0.0);
    EXPECT_LE(r.p_value, 1.0);
    auto warped = g;
    for (auto& grp : warped)
      for (double& v : grp) v = std::exp(v) * 3 - 100;
    EXPECT_NEAR(KruskalWallis(warped).statistic, r.statistic, 1e-12);
  }
}

TEST(KruskalWallisTest, DegenerateInputs) {
  const std::vector<std::vector<double>> one = {{1, 2, 3}};
  const std::vector<std::vector<double>> empty = {{1, 2}, {}};
  const std::vector<std::vector<double>> tiny = {{1}, {2}};
  for (const auto& g : {one, empty, tiny}) {
    try {
      KruskalWallis(g);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kDegenerateInput);
    }
  }
}

TEST(WilcoxonTest, AllPositiveFive) {
  const TestResult r = WilcoxonSignedRank(FromDiffs({1, 2, 3, 4, 5}));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.w_plus, 15);
  EXPECT_EQ(r.statistic, 0);
  EXPECT_NEAR(r.p_value, 0.0625, 1e-15);
}

TEST(WilcoxonTest, MixedSignsThree) {
  const TestResult r = WilcoxonSignedRank(FromDiffs({1, -2, 3}));
  EXPECT_EQ(r.w_plus, 4);
  EXPECT_EQ(r.w_minus, 2);
  EXPECT_NEAR(r.p_value, 0.75, 1e-15);
}

TEST(WilcoxonTest, SwapIsAntisymmetric) {
  const Pairs p = {{3, 1}, {2, 5}, {7, 4}, {1, 1}, {6, 2}, {2, 3}};
  Pairs q;
  for (auto [x, y] : p) q.emplace_back(y, x);
  const TestResult a = WilcoxonSignedRank(p), b = WilcoxonSignedRank(q);
  EXPECT_EQ(a.p_value, b.p_value);
  EXPECT_EQ(a.w_plus, b.w_minus);
  EXPECT_EQ(a.w_minus, b.w_plus);
  EXPECT_EQ(a.n, 5u);
}

TEST(WilcoxonTest, ExactMatchesEnumeration) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 12), val(-4, 4);
  int checked = 0;
  while (checked < 300) {
    std::vector<double> d(len(rng));
    for (double& v : d) v = val(rng);
    bool any = false;
    for (double v : d) any |= v != 0;
    if (!any) continue;
    double w_plus = 0;
    const double oracle = EnumerationP(d, &w_plus);
    const TestResult r = WilcoxonSignedRank(FromDiffs(d));
    EXPECT_TRUE(r.exact);
    EXPECT_NEAR(r.p_value, oracle, 1e-12);
    EXPECT_NEAR(r.w_plus, w_plus, 1e-12);
    ++checked;
  }
}

TEST(WilcoxonTest, NormalApproximationReferences) {
  std::vector<double> d;
  for (int i = 1; i <= 30; ++i) d.push_back(i);
  TestResult r = WilcoxonSignedRank(FromDiffs(d));
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.statistic, 0);
  EXPECT_NEAR(r.p_value, 1.8253714563612074e-06, 1e-12);

  const std::vector<double> tied = {1,  2,  -3, 4,  5,  6,  -7, 8,  9,  10, 11, -12, 13, 14, 15,
                                    16, 17, -18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, -2, 3};
  r = WilcoxonSignedRank(FromDiffs(tied));
  EXPECT_EQ(r.statistic, 50);
  EXPECT_NEAR(r.p_value, 0.0001813765455491591, 1e-12);
}

TEST(WilcoxonTest, ApproximationCloseToExactNearCutoff) {
  std::mt19937 rng(4);
  std::normal_distribution<double> g(0.3, 1);
  Pairs p;
  for (int i = 0; i < 25; ++i) p.emplace_back(g(rng), 0);
  const double exact = WilcoxonSignedRank(p).p_value;
  const double approx = WilcoxonSignedRank(p, WilcoxonOptions{0}).p_value;
  EXPECT_NEAR(exact, approx, 0.01);
}

TEST(WilcoxonTest, AllZeroDifferencesThrows) {
  try {
    WilcoxonSignedRank(Pairs{{1, 1}, {2, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAllZeroDifferences);
  }
}

}  // namespace
}  // namespace tailors
