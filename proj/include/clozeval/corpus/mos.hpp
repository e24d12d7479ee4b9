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

#include <map>
#include <span>
#include <string>

#include "clozeval/corpus/corpus.hpp"

namespace clozeval::corpus {

enum class Aggregation { kMean, kMedian };

// Per-summary opinion score for one factor and rater population.
struct MosTable {
  Factor factor = Factor::kOverall;
  RaterKind rater_kind = RaterKind::kCrowd;
  std::map<std::string, double> values;  // summary_id -> aggregated score in [1,5]

  // Display label, e.g. "summary_informativeness/expert".
  std::string label() const;
};

// Aggregates every annotation matching (factor, rater_kind). Summaries with no
// matching score are absent from the table. The default arithmetic mean is
// computed from exact integer sums, so the result does not depend on the
// order of `annotations`.
MosTable aggregate_mos(std::span<const AnnotationRecord> annotations, Factor factor,
                       RaterKind rater_kind, Aggregation aggregation = Aggregation::kMean);

}  // namespace clozeval::corpus
