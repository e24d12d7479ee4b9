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

#include "clozeval/lexical/bleu.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "clozeval/lexical/ngrams.hpp"
#include "clozeval/lexical/rouge.hpp"

namespace clozeval::lexical {

double bleu(std::span<const std::string> candidate, std::span<const std::vector<std::string>> references,
            const BleuOptions& options) {
  if (references.empty()) throw std::invalid_argument("bleu: at least one reference is required");
  if (options.max_order < 1) throw std::invalid_argument("bleu: max_order must be >= 1");
  if (candidate.empty()) return 0.0;

  double log_sum = 0.0;
  for (int n = 1; n <= options.max_order; ++n) {
    const auto order = static_cast<std::size_t>(n);
    const auto cand = count_ngrams(candidate, order);
    std::vector<NgramCounts> ref_counts;
    ref_counts.reserve(references.size());
    for (const auto& ref : references) ref_counts.push_back(count_ngrams(ref, order));

    std::size_t matched = 0;
    for (const auto& [gram, count] : cand.counts) {
      std::size_t max_ref = 0;
      for (const auto& rc : ref_counts) {
        if (auto it = rc.counts.find(gram); it != rc.counts.end()) max_ref = std::max(max_ref, it->second);
      }
      matched += std::min(count, max_ref);
    }

    double precision = 0.0;
    if (matched > 0) {
      precision = static_cast<double>(matched) / static_cast<double>(cand.total);
    } else if (n >= 2 && options.smoothing == BleuSmoothing::kAddOneOnZero) {
      precision = 1.0 / static_cast<double>(cand.total + 1);
    }
    if (precision <= 0.0) return 0.0;
    log_sum += std::log(precision);
  }

  const auto c = static_cast<double>(candidate.size());
  double r = static_cast<double>(references.front().size());
  for (const auto& ref : references) {
    const auto len = static_cast<double>(ref.size());
    if (std::abs(len - c) < std::abs(r - c) || (std::abs(len - c) == std::abs(r - c) && len < r)) r = len;
  }
  const double brevity = c < r ? std::exp(1.0 - r / c) : 1.0;
  return brevity * std::exp(log_sum / options.max_order);
}

double bleu(std::string_view candidate, std::span<const std::string> references, const BleuOptions& options) {
  std::vector<std::vector<std::string>> refs;
  refs.reserve(references.size());
  for (const auto& r : references) refs.push_back(lexical_tokens(r));
  return bleu(lexical_tokens(candidate), refs, options);
}

}  // namespace clozeval::lexical
