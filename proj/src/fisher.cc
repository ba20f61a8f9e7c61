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

#include "tailors/fisher.h"

#include <cmath>

#include "tailors/error.h"

namespace tailors {

std::string SignificanceStars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

FisherComparison FisherCompare(double r1, int n1, double r2, int n2) {
  for (double r : {r1, r2}) {
    if (!(std::abs(r) < 1.0)) {
      throw Error(ErrorKind::kCoefficientOutOfRange,
                  "coefficient " + std::to_string(r) + " outside (-1, 1)");
    }
  }
  if (n1 <= 3 || n2 <= 3) {
    throw Error(ErrorKind::kOutOfRange, "sample sizes must exceed 3");
  }
  FisherComparison c;
  c.r1 = r1;
  c.r2 = r2;
  c.n1 = n1;
  c.n2 = n2;
  const double se = std::sqrt(1.0 / (n1 - 3) + 1.0 / (n2 - 3));
  c.z_stat = (std::atanh(r1) - std::atanh(r2)) / se;
  c.p_value = std::erfc(std::abs(c.z_stat) / std::sqrt(2.0));
  c.stars = SignificanceStars(c.p_value);
  return c;
}

}  // namespace tailors
