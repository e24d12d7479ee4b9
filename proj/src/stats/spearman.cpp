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

#include "clozeval/stats/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "clozeval/error.hpp"
#include "clozeval/simd/kernels.hpp"

namespace clozeval::stats {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 hold ranks i+1..j
    const double rank = static_cast<double>(i + 1 + j) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

namespace {

// Ranks always average to (n + 1) / 2, so centering is exact.
std::vector<double> centered_ranks(std::span<const double> values) {
  auto r = average_ranks(values);
  const double mean = static_cast<double>(values.size() + 1) / 2.0;
  for (double& v : r) v -= mean;
  return r;
}

double rho_of(std::span<const double> cx, std::span<const double> cy, double sxx, double syy) {
  const double sxy = simd::dot(cx, cy);
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double permutation_p_value(std::span<const double> cx, std::vector<double> cy, double sxx, double syy,
                           double observed) {
  constexpr double kTolerance = 1e-12;
  std::sort(cy.begin(), cy.end());
  // Distinct arrangements of a multiset each stand for the same number of
  // index permutations, so counting them gives the same proportion.
  std::size_t total = 0;
  std::size_t extreme = 0;
  do {
    ++total;
    if (std::abs(rho_of(cx, cy, sxx, syy)) >= std::abs(observed) - kTolerance) ++extreme;
  } while (std::next_permutation(cy.begin(), cy.end()));
  return static_cast<double>(extreme) / static_cast<double>(total);
}

}  // namespace

double correlation_p_value(double rho, std::size_t n) {
  if (n < 3) throw std::invalid_argument("correlation_p_value: n must be >= 3");
  if (std::abs(rho) >= 1.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = std::abs(rho) * std::sqrt(df / (1.0 - rho * rho));
  boost::math::students_t dist(df);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, t)));
}

SpearmanResult spearman(std::span<const double> x, std::span<const double> y, PValueMethod method) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 3) throw std::invalid_argument("spearman: at least 3 pairs required");
  for (std::span<const double> v : {x, y}) {
    if (std::any_of(v.begin(), v.end(), [](double d) { return std::isnan(d); })) {
      throw std::invalid_argument("spearman: NaN in input");
    }
  }

  const auto cx = centered_ranks(x);
  const auto cy = centered_ranks(y);
  const double sxx = simd::dot(std::span<const double>(cx), std::span<const double>(cx));
  const double syy = simd::dot(std::span<const double>(cy), std::span<const double>(cy));
  if (sxx == 0.0 || syy == 0.0) throw StatisticsError("spearman: correlation undefined for constant input");

  SpearmanResult r;
  r.n = x.size();
  r.rho = rho_of(cx, cy, sxx, syy);
  if (method == PValueMethod::kExactPermutation) {
    if (r.n > 10) throw std::invalid_argument("spearman: exact permutation p-value limited to n <= 10");
    r.p_value = permutation_p_value(cx, cy, sxx, syy, r.rho);
  } else {
    r.p_value = correlation_p_value(r.rho, r.n);
  }
  return r;
}

}  // namespace clozeval::stats
