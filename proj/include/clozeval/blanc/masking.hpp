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
#include <vector>

#include "clozeval/blanc/config.hpp"
#include "clozeval/text/subtokens.hpp"

namespace clozeval::blanc {

// A token may be masked only if its character length reaches the threshold
// for its kind (L_normal, L_lead or L_follow).
bool is_eligible(const text::SubToken& token, const BlancConfig& config) noexcept;

// Positions of one sentence masked together in one pass.
struct MaskingPlan {
  std::size_t sentence_index = 0;
  std::size_t offset = 0;                     // in [0, gap)
  std::vector<std::size_t> masked_positions;  // p % gap == offset, all eligible

  bool operator==(const MaskingPlan&) const = default;
};

// One plan per offset in [0, gap), masking every eligible position p with
// p % gap == offset. Plans without any masked position are dropped, so every
// eligible token is masked exactly once across the returned plans.
std::vector<MaskingPlan> build_masking_plans(const text::SentenceTokens& sentence,
                                             const BlancConfig& config);

}  // namespace clozeval::blanc
