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

// Ordinary least squares with an intercept and the usual diagnostics.

#ifndef TAILORS_REGRESSION_H_
#define TAILORS_REGRESSION_H_

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace tailors {

struct CoefficientRow {
  std::string name;
  double coefficient = 0.0;
  double std_err = 0.0;
  double t_value = 0.0;
  double p_value = 1.0;
};

struct RegressionResult {
  // One row per design column, in column order.
  std::vector<CoefficientRow> rows;
  CoefficientRow intercept;
  double r_squared = 0.0;
  double adj_r_squared = 0.0;
  double f_statistic = 0.0;
  double f_p_value = 1.0;
  int df_model = 0;
  int df_resid = 0;
  // Ratio of extreme singular values of the intercept-augmented design.
  double condition_number = 0.0;
  Eigen::VectorXd residuals;
};

// Fits y = b0 + X b by column-pivoted QR. Standard errors use the unbiased
// residual variance and p-values the two-sided t distribution with
// n - k - 1 df. Throws Error{kDegenerateInput} unless n >= k + 2 and y varies,
// and Error{kRankDeficient} for a collinear design.
RegressionResult OlsFit(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                        const std::vector<std::string>& names = {});

}  // namespace tailors

#endif  // TAILORS_REGRESSION_H_
