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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clozeval/corpus/corpus.hpp"

namespace clozeval::stats {

enum class SplitCriterion { kSourceLength, kSummaryLength, kCompression };

inline constexpr SplitCriterion kAllCriteria[] = {SplitCriterion::kSourceLength, SplitCriterion::kSummaryLength,
                                                  SplitCriterion::kCompression};

std::string_view to_string(SplitCriterion c) noexcept;
std::optional<SplitCriterion> parse_split_criterion(std::string_view name) noexcept;

// Whitespace word counts of the NFC text; compression is summary words over
// source words (0 when the source is empty).
double criterion_value(const corpus::CorpusRecord& record, SplitCriterion criterion);

struct GroupSplit {
  SplitCriterion criterion = SplitCriterion::kSummaryLength;
  double threshold = 0.0;  // mean of the criterion values
  std::vector<std::string> low_ids;   // value < threshold
  std::vector<std::string> high_ids;  // value >= threshold
};

// Mean of `values`, equal to the common value when all values are equal.
double stable_mean(std::span<const double> values);

// Needs at least two records (std::invalid_argument otherwise). Ids keep the
// corpus order within each group.
GroupSplit split_by_mean(std::span<const corpus::CorpusRecord> records, SplitCriterion criterion);

}  // namespace clozeval::stats
