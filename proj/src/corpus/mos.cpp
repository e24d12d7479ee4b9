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

#include "clozeval/corpus/mos.hpp"

#include <algorithm>
#include <vector>

namespace clozeval::corpus {

std::string MosTable::label() const {
  return std::string(to_string(factor)) + "/" + std::string(to_string(rater_kind));
}

MosTable aggregate_mos(std::span<const AnnotationRecord> annotations, Factor factor,
                       RaterKind rater_kind, Aggregation aggregation) {
  std::map<std::string, std::vector<int>> scores;
  for (const auto& a : annotations) {
    if (a.rater_kind != rater_kind) continue;
    auto it = a.factors.find(factor);
    if (it == a.factors.end()) continue;
    scores[a.summary_id].push_back(it->second);
  }

  MosTable table{factor, rater_kind, {}};
  for (auto& [id, s] : scores) {
    if (aggregation == Aggregation::kMean) {
      long long total = 0;
      for (int v : s) total += v;
      table.values[id] = static_cast<double>(total) / static_cast<double>(s.size());
    } else {
      std::sort(s.begin(), s.end());
      const std::size_t mid = s.size() / 2;
      table.values[id] = s.size() % 2 == 1 ? s[mid] : (s[mid - 1] + s[mid]) / 2.0;
    }
  }
  return table;
}

}  // namespace clozeval::corpus
