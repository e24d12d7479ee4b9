// Copyright 2026 The clozeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>

namespace clozeval::stats {

// 5% critical value for the normality test with estimated mean and variance,
// applied to the small-sample-corrected statistic.
inline constexpr double kAndersonDarlingCritical5 = 0.752;

struct AndersonDarlingResult {
  double a2 = 0.0;       // raw statistic
  double a2_star = 0.0;  // a2 * (1 + 0.75/n + 2.25/n^2)
  bool reject_at_5pct = false;
};

// Anderson-Darling test of normality with parameters estimated from the
// sample (mean, n-1 standard deviation):
//   A^2 = -n - (1/n) sum_{i=1..n} (2i - 1) [ln F(z_i) + ln(1 - F(z_{n+1-i}))]
// over the sorted standardized sample z. Requires n >= 8 and a non-constant
// sample (StatisticsError otherwise).
AndersonDarlingResult anderson_darling_normal(std::span<const double> sample);

}  // namespace clozeval::stats
