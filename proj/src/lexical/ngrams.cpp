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

#include "clozeval/lexical/ngrams.hpp"

#include <algorithm>

namespace clozeval::lexical {

NgramCounts count_ngrams(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts out;
  if (n == 0 || tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      key += '\x1f';
      key += tokens[i + k];
    }
    ++out.counts[key];
    ++out.total;
  }
  return out;
}

std::size_t clipped_overlap(const NgramCounts& a, const NgramCounts& b) {
  std::size_t overlap = 0;
  for (const auto& [gram, count] : a.counts) {
    if (auto it = b.counts.find(gram); it != b.counts.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

}  // namespace clozeval::lexical
