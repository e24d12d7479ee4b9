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

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clozeval/lm/backend.hpp"

namespace clozeval::lm {

// Scripted behaviour of a MockBackend. Prediction for a masked position is
// resolved in order:
//   1. answers[(query.context, position)]
//   2. rule(query, position), if set and it returns a value
//   3. constant, if set
//   4. the most frequent visible token of the input (non-special, not
//      masked), ties broken by the smallest string; "[UNK]" if none.
struct MockScript {
  // Served models. Defaults to the three German BERT models with a
  // 32-dimensional embedding space.
  std::vector<BackendDescriptor> models;

  // Greedy longest-prefix subword vocabulary. Words that cannot be split
  // from their first character stay whole; an empty vocabulary keeps every
  // whitespace token whole.
  std::vector<std::string> vocabulary;

  std::map<std::pair<std::string, std::size_t>, std::string> answers;
  std::function<std::optional<std::string>(const MaskQuery&, std::size_t position)> rule;
  std::optional<std::string> constant;

  // Scripted embedding vectors keyed by raw token; other tokens get
  // hash-seeded pseudo-random directions. All vectors are unit-normalized.
  std::map<std::string, std::vector<float>> embeddings;
};

// Default descriptors: the three German models, max length 512, dimension 32;
// the dbmdz uncased model lowercases its input.
std::vector<BackendDescriptor> default_mock_models();

// Deterministic in-process backend for hermetic tests and offline runs.
// The script is immutable after construction, so concurrent calls are safe.
class MockBackend final : public Backend {
 public:
  explicit MockBackend(MockScript script = {});

  std::vector<BackendDescriptor> models() const override;
  MaskPrediction predict_masked(const MaskQuery& query) const override;
  std::vector<std::string> tokenize(std::string_view text, std::string_view model_id) const override;
  EmbeddingMatrix embed_tokens(std::string_view text, std::string_view model_id) const override;

  // Call counters (predict counts individual queries, including batch elements).
  std::size_t predict_calls() const noexcept { return predict_calls_.load(); }
  std::size_t tokenize_calls() const noexcept { return tokenize_calls_.load(); }
  std::size_t embed_calls() const noexcept { return embed_calls_.load(); }
  std::size_t total_calls() const noexcept {
    return predict_calls() + tokenize_calls() + embed_calls();
  }

 private:
  const BackendDescriptor& find_model(std::string_view model_id) const;
  std::vector<std::string> split_word(const std::string& word, const std::string& marker) const;
  std::vector<std::string> tokenize_impl(std::string_view text, const BackendDescriptor& d) const;

  MockScript script_;
  mutable std::atomic<std::size_t> predict_calls_{0};
  mutable std::atomic<std::size_t> tokenize_calls_{0};
  mutable std::atomic<std::size_t> embed_calls_{0};
};

}  // namespace clozeval::lm
