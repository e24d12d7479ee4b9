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

#include "clozeval/stats/groups.hpp"

#include <stdexcept>

#include "clozeval/text/unicode.hpp"

namespace clozeval::stats {

std::string_view to_string(SplitCriterion c) noexcept {
  switch (c) {
    case SplitCriterion::kSourceLength: return "source_length";
    case SplitCriterion::kSummaryLength: return "summary_length";
    case SplitCriterion::kCompression: return "compression";
  }
  return "?";
}

std::optional<SplitCriterion> parse_split_criterion(std::string_view name) noexcept {
  for (auto c : kAllCriteria) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

double criterion_value(const corpus::CorpusRecord& record, SplitCriterion criterion) {
  const auto summary = static_cast<double>(text::word_count(record.summary));
  const auto source = static_cast<double>(text::word_count(record.source));
  switch (criterion) {
    case SplitCriterion::kSourceLength: return source;
    case SplitCriterion::kSummaryLength: return summary;
    case SplitCriterion::kCompression: return source > 0.0 ? summary / source : 0.0;
  }
  return 0.0;
}

double stable_mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("stable_mean: empty input");
  // Offsets from the first value; exact for a constant sequence.
  const double base = values.front();
  double acc = 0.0;
  for (double v : values) acc += v - base;
  return base + acc / static_cast<double>(values.size());
}

GroupSplit split_by_mean(std::span<const corpus::CorpusRecord> records, SplitCriterion criterion) {
  if (records.size() < 2) throw std::invalid_argument("split_by_mean: at least 2 records required");
  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& r : records) values.push_back(criterion_value(r, criterion));

  GroupSplit split;
  split.criterion = criterion;
  split.threshold = stable_mean(values);
  for (std::size_t i = 0; i < records.size(); ++i) {
    (values[i] >= split.threshold ? split.high_ids : split.low_ids).push_back(records[i].id);
  }
  return split;
}

}  // namespace clozeval::stats
