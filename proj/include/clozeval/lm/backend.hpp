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

// Masked-language-model contract used by BLANC and BERTScore.
//
// A backend serves one or more models. Each model exposes its tokenizer,
// top-1 fill-mask predictions and last-layer token embeddings. Only top-1
// token strings cross this interface; success/failure judgement belongs to
// the caller.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clozeval/error.hpp"

namespace clozeval::lm {

inline constexpr std::string_view kGermanCased = "bert-base-german-cased";
inline constexpr std::string_view kGermanDbmdzCased = "bert-base-german-dbmdz-cased";
inline constexpr std::string_view kGermanDbmdzUncased = "bert-base-german-dbmdz-uncased";

inline constexpr std::array<std::string_view, 3> kGermanModels = {kGermanCased, kGermanDbmdzCased,
                                                                  kGermanDbmdzUncased};

struct BackendDescriptor {
  std::string model_id;
  std::size_t max_sequence_length = 512;
  std::string continuation_marker = "##";
  std::size_t embedding_dimension = 768;
  bool lowercase = false;  // the tokenizer lowercases its input (uncased models)
  bool loaded = true;
  std::string cls_token = "[CLS]";
  std::string sep_token = "[SEP]";
  std::string mask_token = "[MASK]";

  bool is_special(std::string_view token) const noexcept {
    return token == cls_token || token == sep_token || token == mask_token;
  }
  bool operator==(const BackendDescriptor&) const = default;
};

// Throws std::invalid_argument unless max_sequence_length >= 16 and model_id
// is non-empty.
void validate(const BackendDescriptor& descriptor);

// Which half of a BLANC input pair a query belongs to. Client-side metadata
// only; never serialized.
enum class QueryRole { kPlain, kAssisted, kUnassisted };

// Tokens carry the original tokens at the masked positions; the backend
// replaces them with its mask token before inference.
struct MaskQuery {
  std::string model_id;
  std::vector<std::string> tokens;
  std::vector<std::size_t> mask_positions;  // strictly increasing

  // Client-side metadata (record id and pair role), not part of the wire format.
  std::string context;
  QueryRole role = QueryRole::kPlain;
};

struct MaskPrediction {
  std::vector<std::string> predicted;  // aligned with mask_positions
  bool operator==(const MaskPrediction&) const = default;
};

// Throws BackendError(kValidation) for bad positions or special-token targets
// and BackendError(kOverLength) when the input exceeds the model limit.
void validate(const MaskQuery& query, const BackendDescriptor& descriptor);

struct BatchFailure {
  BackendErrorKind kind;
  std::string message;
};

// One element of a batch response: exactly one of the two members is set.
struct BatchItem {
  std::optional<MaskPrediction> prediction;
  std::optional<BatchFailure> failure;

  bool ok() const noexcept { return prediction.has_value(); }
};

// Row-major matrix of token vectors.
struct EmbeddingMatrix {
  std::size_t rows = 0;
  std::size_t dim = 0;
  std::vector<float> data;

  std::span<const float> row(std::size_t i) const { return {data.data() + i * dim, dim}; }
  std::span<float> row(std::size_t i) { return {data.data() + i * dim, dim}; }
};

class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::vector<BackendDescriptor> models() const = 0;

  // Descriptor for `model_id`; throws BackendError(kUnknownModel).
  virtual BackendDescriptor describe(std::string_view model_id) const;

  virtual MaskPrediction predict_masked(const MaskQuery& query) const = 0;

  // Element-wise predict_masked. Failures are reported per element and never
  // dropped; output order matches input order.
  virtual std::vector<BatchItem> batch(std::span<const MaskQuery> queries) const;

  // Subword tokens of `text` with continuation markers intact.
  virtual std::vector<std::string> tokenize(std::string_view text, std::string_view model_id) const = 0;

  // One vector per subword token of `text`.
  virtual EmbeddingMatrix embed_tokens(std::string_view text, std::string_view model_id) const = 0;
};

}  // namespace clozeval::lm
