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
#include <map>
#include <string>
#include <string_view>

namespace clozeval::lexical {

struct WordDistribution {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;  // sum of counts
};

// Word counts over lexical_tokens(text). Throws std::invalid_argument if the
// text has no word tokens.
WordDistribution word_distribution(std::string_view text);

// Jensen-Shannon divergence in bits against the mixture M = (P + Q) / 2;
// in [0, 1] and symmetric.
double js_divergence(const WordDistribution& p, const WordDistribution& q);

// 1 - JSD(summary words, source words); 1 for identical distributions and 0
// for disjoint vocabularies.
double js_similarity(std::string_view summary, std::string_view source);

}  // namespace clozeval::lexical
