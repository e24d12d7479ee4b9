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

#include "clozeval/simd/kernels.hpp"

namespace clozeval::simd {
namespace {

float dot_f32_scalar(const float* a, const float* b, std::size_t n) {
  float acc = 0.0f;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double dot_f64_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_f64_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

void pairwise_dot_f32_scalar(const float* a, std::size_t m, const float* b, std::size_t n,
                             std::size_t dim, float* out) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = dot_f32_scalar(a + i * dim, b + j * dim, dim);
    }
  }
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Isa::kScalar, &dot_f32_scalar, &dot_f64_scalar, &sum_f64_scalar,
                               &pairwise_dot_f32_scalar};
}  // namespace detail

}  // namespace clozeval::simd
