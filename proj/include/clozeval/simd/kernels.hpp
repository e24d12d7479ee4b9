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

// Dense arithmetic kernels with a scalar reference and vectorized variants.
//
// Every variant computes the same mathematical quantity; results differ only
// by floating-point summation order. The active table is chosen once at
// startup from the CPU's capabilities and can be forced to the scalar
// reference with CLOZEVAL_SIMD=scalar.

#include <cstddef>
#include <span>
#include <vector>

namespace clozeval::simd {

enum class Isa { kScalar, kAvx2, kNeon };

const char* to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  float (*dot_f32)(const float* a, const float* b, std::size_t n);
  double (*dot_f64)(const double* a, const double* b, std::size_t n);
  double (*sum_f64)(const double* a, std::size_t n);
  // out[i * n + j] = dot(a_row_i, b_row_j); rows are contiguous, `dim` wide.
  void (*pairwise_dot_f32)(const float* a, std::size_t m, const float* b, std::size_t n,
                           std::size_t dim, float* out);
};

// True if the variant was compiled in and the running CPU can execute it.
bool available(Isa isa) noexcept;

// Kernel table for a specific variant; nullptr when !available(isa).
const KernelTable* table_for(Isa isa) noexcept;

// The table selected for this process.
const KernelTable& active() noexcept;

std::vector<Isa> available_isas();

float dot(std::span<const float> a, std::span<const float> b);
double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);

namespace detail {
extern const KernelTable kScalarTable;
#if defined(CLOZEVAL_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(CLOZEVAL_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace clozeval::simd
