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

#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace clozeval::simd {

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(CLOZEVAL_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(CLOZEVAL_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* table_for(Isa isa) noexcept {
  if (!available(isa)) return nullptr;
  switch (isa) {
    case Isa::kScalar:
      return &detail::kScalarTable;
    case Isa::kAvx2:
#if defined(CLOZEVAL_HAVE_AVX2)
      return &detail::kAvx2Table;
#else
      return nullptr;
#endif
    case Isa::kNeon:
#if defined(CLOZEVAL_HAVE_NEON)
      return &detail::kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

namespace {

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("CLOZEVAL_SIMD")) {
    std::string_view f(forced);
    if (f == "scalar") return detail::kScalarTable;
    if (f == "avx2" && available(Isa::kAvx2)) return *table_for(Isa::kAvx2);
    if (f == "neon" && available(Isa::kNeon)) return *table_for(Isa::kNeon);
  }
  if (available(Isa::kAvx2)) return *table_for(Isa::kAvx2);
  if (available(Isa::kNeon)) return *table_for(Isa::kNeon);
  return detail::kScalarTable;
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (available(isa)) out.push_back(isa);
  }
  return out;
}

float dot(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  return active().dot_f32(a.data(), b.data(), a.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  return active().dot_f64(a.data(), b.data(), a.size());
}

double sum(std::span<const double> a) { return active().sum_f64(a.data(), a.size()); }

}  // namespace clozeval::simd
