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

#include "clozeval/lexical/rouge.hpp"
#include "clozeval/lm/backend.hpp"
#include "clozeval/simd/kernels.hpp"

namespace clozeval::lexical {

inline constexpr std::string_view kBertScoreModel = lm::kGermanCased;

// Greedy cosine matching without IDF weighting or baseline rescaling:
// P = mean over candidate tokens of the best cosine against the reference,
// R = mean over reference tokens of the best cosine against the candidate.
// `kernels` selects the dot-product implementation (default: active()).
PrfScore bertscore_from_embeddings(const lm::EmbeddingMatrix& candidate,
                                   const lm::EmbeddingMatrix& reference,
                                   const simd::KernelTable& kernels = simd::active());

PrfScore bertscore(std::string_view candidate, std::string_view reference, const lm::Backend& backend,
                   std::string_view model_id = kBertScoreModel);

double bertscore_f(std::string_view candidate, std::string_view reference, const lm::Backend& backend,
                   std::string_view model_id = kBertScoreModel);

// Highest F over the references; 0 for an empty reference list.
double bertscore_f_max(std::string_view candidate, std::span<const std::string> references,
                       const lm::Backend& backend, std::string_view model_id = kBertScoreModel);

}  // namespace clozeval::lexical
