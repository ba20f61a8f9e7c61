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

#include "tailors/regression.h"

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>

#include "tailors/error.h"

namespace tailors {

namespace {

double TwoSidedT(double t, double df) {
  if (!std::isfinite(t)) return 0.0;
  const boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

}  // namespace

RegressionResult OlsFit(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                        const std::vector<std::string>& names) {
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  if (response.size() != n) {
    throw Error(ErrorKind::kDegenerateInput, "design and response lengths differ");
  }
  if (n < k + 2) {
    throw Error(ErrorKind::kDegenerateInput,
                std::to_string(n) + " rows cannot fit " + std::to_string(k) +
                    " regressors plus an intercept with residual df >= 1");
  }
  if (!names.empty() && static_cast<Eigen::Index>(names.size()) != k) {
    throw Error(ErrorKind::kDegenerateInput, "one name per design column required");
  }

  Eigen::MatrixXd a(n, k + 1);
  a.col(0).setOnes();
  a.rightCols(k) = design;

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < k + 1) {
    throw Error(ErrorKind::kRankDeficient,
                "design rank " + std::to_string(qr.rank()) + " < " + std::to_string(k + 1) +
                    " columns (intercept included)");
  }
  const Eigen::VectorXd beta = qr.solve(response);

  RegressionResult out;
  out.residuals = response - a * beta;
  out.df_model = static_cast<int>(k);
  out.df_resid = static_cast<int>(n - k - 1);
  const double ssr = out.residuals.squaredNorm();
  const double sst = (response.array() - response.mean()).square().sum();
  if (!(sst > 0.0)) throw Error(ErrorKind::kDegenerateInput, "response has zero variance");
  out.r_squared = std::clamp(1.0 - ssr / sst, 0.0, 1.0);
  out.adj_r_squared =
      1.0 - (1.0 - out.r_squared) * static_cast<double>(n - 1) / static_cast<double>(out.df_resid);
  out.f_statistic = (out.r_squared / out.df_model) / ((1.0 - out.r_squared) / out.df_resid);
  if (std::isfinite(out.f_statistic)) {
    const boost::math::fisher_f dist(out.df_model, out.df_resid);
    out.f_p_value = boost::math::cdf(boost::math::complement(dist, out.f_statistic));
  } else {
    out.f_p_value = 0.0;
  }

  // (A'A)^-1 = P R^-1 R^-T P' from the pivoted factorization.
  const Eigen::Index p = k + 1;
  const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd r_inv =
      r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::MatrixXd perm = qr.colsPermutation();
  const Eigen::MatrixXd cov_unscaled = perm * (r_inv * r_inv.transpose()) * perm.transpose();
  const double sigma2 = ssr / out.df_resid;

  auto row = [&](Eigen::Index j, std::string name) {
    CoefficientRow c;
    c.name = std::move(name);
    c.coefficient = beta(j);
    c.std_err = std::sqrt(sigma2 * cov_unscaled(j, j));
    c.t_value = c.coefficient / c.std_err;
    c.p_value = TwoSidedT(c.t_value, out.df_resid);
    return c;
  };
  out.intercept = row(0, "intercept");
  for (Eigen::Index j = 0; j < k; ++j) {
    out.rows.push_back(row(j + 1, names.empty() ? "x" + std::to_string(j + 1) : names[j]));
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  out.condition_number = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : HUGE_VAL;
  return out;
}

}  // namespace tailors
