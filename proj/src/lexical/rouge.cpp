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

#include "clozeval/lexical/rouge.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "clozeval/lexical/ngrams.hpp"
#include "clozeval/text/unicode.hpp"

namespace clozeval::lexical {

Tokens lexical_tokens(std::string_view text) { return text::unicode_words(text::to_lower(text::nfc(text))); }

PrfScore PrfScore::from(double precision, double recall) noexcept {
  const double denom = precision + recall;
  return PrfScore{precision, recall, denom > 0.0 ? 2.0 * precision * recall / denom : 0.0};
}

PrfScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n) {
  if (n < 1) throw std::invalid_argument("rouge_n: n must be >= 1");
  const auto cand = count_ngrams(candidate, static_cast<std::size_t>(n));
  const auto ref = count_ngrams(reference, static_cast<std::size_t>(n));
  if (cand.total == 0 || ref.total == 0) return {};
  const std::size_t overlap = clipped_overlap(cand, ref);
  return PrfScore::from(static_cast<double>(overlap) / static_cast<double>(cand.total),
                        static_cast<double>(overlap) / static_cast<double>(ref.total));
}

PrfScore rouge_n(std::string_view candidate, std::string_view reference, int n) {
  return rouge_n(lexical_tokens(candidate), lexical_tokens(reference), n);
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

PrfScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  if (candidate.empty() || reference.empty()) return {};
  const auto lcs = static_cast<double>(lcs_length(candidate, reference));
  return PrfScore::from(lcs / static_cast<double>(candidate.size()),
                        lcs / static_cast<double>(reference.size()));
}

PrfScore rouge_l(std::string_view candidate, std::string_view reference) {
  return rouge_l(lexical_tokens(candidate), lexical_tokens(reference));
}

namespace {

template <typename Score>
PrfScore best_reference(std::span<const std::string> references, Score&& score) {
  PrfScore best;
  bool first = true;
  for (const auto& ref : references) {
    PrfScore s = score(ref);
    if (first || s.f1 > best.f1) best = s;
    first = false;
  }
  return best;
}

}  // namespace

PrfScore rouge_n_max(std::string_view candidate, std::span<const std::string> references, int n) {
  const Tokens cand = lexical_tokens(candidate);
  return best_reference(references, [&](const std::string& ref) { return rouge_n(cand, lexical_tokens(ref), n); });
}

PrfScore rouge_l_max(std::string_view candidate, std::span<const std::string> references) {
  const Tokens cand = lexical_tokens(candidate);
  return best_reference(references, [&](const std::string& ref) { return rouge_l(cand, lexical_tokens(ref)); });
}

}  // namespace clozeval::lexical
