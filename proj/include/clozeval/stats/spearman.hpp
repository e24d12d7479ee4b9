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

#include <cstddef>
#include <span>
#include <vector>

namespace clozeval::stats {

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

enum class PValueMethod {
  // Two-tailed Student t with n - 2 degrees of freedom on
  // t = rho * sqrt((n - 2) / (1 - rho^2)).
  kTApproximation,
  // Share of all n! rearrangements of y with |rho| at least as large as the
  // observed one. Only for n <= 10.
  kExactPermutation,
};

struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};

// Spearman rank correlation: Pearson correlation of the average-rank
// vectors. Requires equal lengths n >= 3 (std::invalid_argument otherwise);
// a constant input throws StatisticsError.
SpearmanResult spearman(std::span<const double> x, std::span<const double> y,
                        PValueMethod method = PValueMethod::kTApproximation);

// Two-tailed t-approximation p-value for a correlation of n pairs.
double correlation_p_value(double rho, std::size_t n);

}  // namespace clozeval::stats
