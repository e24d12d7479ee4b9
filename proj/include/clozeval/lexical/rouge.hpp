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
#include <string>
#include <string_view>
#include <vector>

namespace clozeval::lexical {

using Tokens = std::vector<std::string>;

// Lowercased Unicode word segments of NFC-normalized text; punctuation is
// dropped and no stemming is applied. All lexical metrics tokenize with this.
Tokens lexical_tokens(std::string_view text);

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // f1 = 2PR / (P + R), or 0 when P + R == 0.
  static PrfScore from(double precision, double recall) noexcept;
  bool operator==(const PrfScore&) const = default;
};

// Clipped n-gram overlap. Precision is relative to the candidate's n-grams,
// recall to the reference's; sequences shorter than n give an all-zero score.
PrfScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n);
PrfScore rouge_n(std::string_view candidate, std::string_view reference, int n);

// Token-level longest common subsequence: P = LCS/|cand|, R = LCS/|ref|.
PrfScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);
PrfScore rouge_l(std::string_view candidate, std::string_view reference);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

// Multi-reference variants: the reference giving the highest F1 wins.
// An empty reference list yields an all-zero score.
PrfScore rouge_n_max(std::string_view candidate, std::span<const std::string> references, int n);
PrfScore rouge_l_max(std::string_view candidate, std::span<const std::string> references);

}  // namespace clozeval::lexical
