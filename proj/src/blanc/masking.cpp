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

#include "clozeval/blanc/masking.hpp"

namespace clozeval::blanc {

bool is_eligible(const text::SubToken& token, const BlancConfig& config) noexcept {
  std::size_t threshold = 0;
  switch (token.kind) {
    case text::TokenKind::kNormal:
      threshold = static_cast<std::size_t>(config.l_normal);
      break;
    case text::TokenKind::kLead:
      threshold = static_cast<std::size_t>(config.l_lead);
      break;
    case text::TokenKind::kFollow:
      threshold = static_cast<std::size_t>(config.l_follow);
      break;
  }
  return token.effective_length >= threshold;
}

std::vector<MaskingPlan> build_masking_plans(const text::SentenceTokens& sentence,
                                             const BlancConfig& config) {
  validate(config);
  const auto gap = static_cast<std::size_t>(config.gap);
  std::vector<MaskingPlan> plans;
  for (std::size_t offset = 0; offset < gap; ++offset) {
    MaskingPlan plan{sentence.sentence_index, offset, {}};
    for (std::size_t p = offset; p < sentence.tokens.size(); p += gap) {
      if (is_eligible(sentence.tokens[p], config)) plan.masked_positions.push_back(p);
    }
    if (!plan.masked_positions.empty()) plans.push_back(std::move(plan));
  }
  return plans;
}

}  // namespace clozeval::blanc
