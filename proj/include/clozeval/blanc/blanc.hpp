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

// BLANC-help: how much a summary helps a masked language model reconstruct
// masked tokens of the source document.
//
// Every source sentence is masked in `gap` interleaved passes. For each pass
// the model sees two inputs that differ only in their prefix:
//
//   assisted:   [CLS] summary tokens   [SEP] masked sentence [SEP]
//   unassisted: [CLS] "." x |summary|  [SEP] masked sentence [SEP]
//
// Each masked token yields a pair (unassisted correct, assisted correct).
// Counts are pooled over the whole document and
//   score = (S01 - S10) / N,
// where S01 counts tokens recovered only with the summary's help and S10
// tokens recovered only without it.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clozeval/blanc/config.hpp"
#include "clozeval/blanc/masking.hpp"
#include "clozeval/corpus/corpus.hpp"
#include "clozeval/lm/backend.hpp"
#include "clozeval/text/subtokens.hpp"

namespace clozeval::blanc {

inline constexpr std::string_view kFillerToken = ".";

struct BlancScore {
  // S<u><a>: u = unassisted prediction correct, a = assisted prediction correct.
  std::size_t s00 = 0;
  std::size_t s01 = 0;
  std::size_t s10 = 0;
  std::size_t s11 = 0;
  std::size_t n = 0;
  double score = 0.0;

  bool operator==(const BlancScore&) const = default;
};

// Fills n and score from the four counts; throws UnmaskableDocumentError when
// no token was masked.
BlancScore finalize(std::size_t s00, std::size_t s01, std::size_t s10, std::size_t s11);

struct InputPair {
  lm::MaskQuery assisted;
  lm::MaskQuery unassisted;
  std::size_t summary_tokens_used = 0;  // after tail truncation
};

// Builds the assisted/unassisted inputs for one masking plan. When the pair
// exceeds the model's max_sequence_length the summary tail is dropped; the
// sentence is never truncated, and BackendError(kOverLength) is raised if it
// does not fit on its own.
InputPair assemble_pair(const std::vector<std::string>& summary_tokens,
                        const text::SentenceTokens& sentence, const MaskingPlan& plan,
                        const lm::BackendDescriptor& backend);

// A record tokenized for one model; reusable across configurations that
// share the model.
struct TokenizedDocument {
  std::string record_id;
  lm::BackendDescriptor descriptor;
  std::vector<std::string> summary_tokens;  // raw, markers intact
  std::vector<text::SentenceTokens> sentences;
};

TokenizedDocument tokenize_document(const corpus::CorpusRecord& record, std::string_view model_id,
                                    const lm::Backend& backend);

struct BlancOptions {
  // Compare predictions case-insensitively (useful for uncased models).
  bool case_insensitive = false;
};

// Errors: UnmaskableDocumentError when no token is eligible; BackendError
// (with record and sentence context) when the backend fails.
BlancScore blanc_help(const TokenizedDocument& document, const BlancConfig& config,
                      const lm::Backend& backend, const BlancOptions& options = {});

BlancScore blanc_help(const corpus::CorpusRecord& record, const BlancConfig& config,
                      const lm::Backend& backend, const BlancOptions& options = {});

}  // namespace clozeval::blanc
