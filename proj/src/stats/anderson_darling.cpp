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

#include "clozeval/stats/anderson_darling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "clozeval/error.hpp"

namespace clozeval::stats {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// ln F(z) and ln(1 - F(z)) for the standard normal F, both through erfc so
// that log_cdf(-z) and log_sf(z) are bit-identical.
double log_cdf(double z) { return std::log(0.5 * std::erfc(-z * kInvSqrt2)); }
double log_sf(double z) { return std::log(0.5 * std::erfc(z * kInvSqrt2)); }

}  // namespace

AndersonDarlingResult anderson_darling_normal(std::span<const double> sample) {
  const std::size_t n = sample.size();
  if (n < 8) throw StatisticsError("anderson_darling_normal: at least 8 observations required");

  double sum = 0.0;
  for (double v : sample) sum += v;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : sample) ss += (v - mean) * (v - mean);
  if (ss == 0.0) throw StatisticsError("anderson_darling_normal: sample has zero variance");
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  std::vector<double> z(sample.begin(), sample.end());
  for (double& v : z) v = (v - mean) / sd;
  std::sort(z.begin(), z.end());

  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto weight = static_cast<double>(2 * i + 1);
    acc += weight * (log_cdf(z[i]) + log_sf(z[n - 1 - i]));
  }
  const auto nd = static_cast<double>(n);
  AndersonDarlingResult r;
  r.a2 = -nd - acc / nd;
  r.a2_star = r.a2 * (1.0 + 0.75 / nd + 2.25 / (nd * nd));
  r.reject_at_5pct = r.a2_star > kAndersonDarlingCritical5;
  return r;
}

}  // namespace clozeval::stats
