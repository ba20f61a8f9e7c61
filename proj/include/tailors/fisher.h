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

// Comparison of two coefficients through Fisher's z transform.
//
// The reports compare OLS slopes as if they were correlations, using the
// 1/(n-3) variance of a correlation. Slopes outside (-1, 1) are rejected
// rather than clipped.
#ifndef TAILORS_FISHER_H_
#define TAILORS_FISHER_H_

#include <string>

namespace tailors {

struct FisherComparison {
  double r1 = 0.0;
  double r2 = 0.0;
  int n1 = 0;
  int n2 = 0;
  double z_stat = 0.0;
  double p_value = 1.0;
  std::string stars;
};

// "***" for p < 0.001, "**" for p < 0.01, "*" for p < 0.05, else "".
std::string SignificanceStars(double p);

// z = (atanh r1 - atanh r2) / sqrt(1/(n1-3) + 1/(n2-3)), two-sided normal p.
// Throws Error{kCoefficientOutOfRange} for |r| >= 1 and Error{kOutOfRange}
// for n <= 3.
FisherComparison FisherCompare(double r1, int n1, double r2, int n2);

}  // namespace tailors

#endif  // TAILORS_FISHER_H_
