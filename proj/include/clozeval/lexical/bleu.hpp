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
#include <vector>

namespace clozeval::lexical {

enum class BleuSmoothing {
  // p_n = (0 + 1) / (total + 1) when an order n >= 2 has no match
  kAddOneOnZero,
  kNone,
};

struct BleuOptions {
  int max_order = 4;
  BleuSmoothing smoothing = BleuSmoothing::kAddOneOnZero;
};

// Sentence-level BLEU: geometric mean of clipped n-gram precisions
// (n = 1..max_order, counts clipped by the maximum count over references)
// times the brevity penalty exp(1 - r/c) when the candidate length c is
// below the closest reference length r (ties resolved to the shorter).
// An empty candidate scores 0. Throws std::invalid_argument without references.
double bleu(std::span<const std::string> candidate, std::span<const std::vector<std::string>> references,
            const BleuOptions& options = {});
double bleu(std::string_view candidate, std::span<const std::string> references,
            const BleuOptions& options = {});

}  // namespace clozeval::lexical
