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
#include <span>
#include <string>
#include <unordered_map>

namespace clozeval::lexical {

struct NgramCounts {
  std::unordered_map<std::string, std::size_t> counts;  // n-gram joined by '\x1f'
  std::size_t total = 0;
};

NgramCounts count_ngrams(std::span<const std::string> tokens, std::size_t n);

// sum over n-grams of min(count in a, count in b)
std::size_t clipped_overlap(const NgramCounts& a, const NgramCounts& b);

}  // namespace clozeval::lexical
