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

#include "clozeval/lm/mock_backend.hpp"

#include <cmath>
#include <cstdint>
#include <random>

#include "clozeval/text/unicode.hpp"

namespace clozeval::lm {

namespace {

std::uint64_t fnv1a64(std::string_view a, std::string_view b) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(a);
  mix(std::string_view("\0", 1));
  mix(b);
  return h;
}

void normalize(std::span<float> v) {
  double sq = 0.0;
  for (float x : v) sq += static_cast<double>(x) * x;
  if (sq <= 0.0) return;
  const auto inv = static_cast<float>(1.0 / std::sqrt(sq));
  for (float& x : v) x *= inv;
}

}  // namespace

std::vector<BackendDescriptor> default_mock_models() {
  std::vector<BackendDescriptor> out;
  for (auto id : kGermanModels) {
    BackendDescriptor d;
    d.model_id = std::string(id);
    d.max_sequence_length = 512;
    d.embedding_dimension = 32;
    d.lowercase = id == kGermanDbmdzUncased;
    out.push_back(std::move(d));
  }
  return out;
}

MockBackend::MockBackend(MockScript script) : script_(std::move(script)) {
  if (script_.models.empty()) script_.models = default_mock_models();
  for (const auto& d : script_.models) validate(d);
}

std::vector<BackendDescriptor> MockBackend::models() const { return script_.models; }

const BackendDescriptor& MockBackend::find_model(std::string_view model_id) const {
  for (const auto& d : script_.models) {
    if (d.model_id == model_id) return d;
  }
  throw BackendError(BackendErrorKind::kUnknownModel, "unknown model '" + std::string(model_id) + "'");
}

MaskPrediction MockBackend::predict_masked(const MaskQuery& query) const {
  ++predict_calls_;
  const BackendDescriptor& d = find_model(query.model_id);
  validate(query, d);

  std::vector<bool> masked(query.tokens.size(), false);
  for (auto p : query.mask_positions) masked[p] = true;

  std::optional<std::string> fallback;
  auto most_frequent_visible = [&]() -> const std::string& {
    if (!fallback) {
      std::map<std::string_view, std::size_t> freq;
      for (std::size_t i = 0; i < query.tokens.size(); ++i) {
        if (masked[i] || d.is_special(query.tokens[i])) continue;
        ++freq[query.tokens[i]];
      }
      std::string_view best = "[UNK]";
      std::size_t best_count = 0;
      for (const auto& [tok, count] : freq) {  // ordered, so ties keep the smaller string
        if (count > best_count) {
          best = tok;
          best_count = count;
        }
      }
      fallback = std::string(best);
    }
    return *fallback;
  };

  MaskPrediction out;
  out.predicted.reserve(query.mask_positions.size());
  for (auto p : query.mask_positions) {
    if (auto it = script_.answers.find({query.context, p}); it != script_.answers.end()) {
      out.predicted.push_back(it->second);
      continue;
    }
    if (script_.rule) {
      if (auto r = script_.rule(query, p)) {
        out.predicted.push_back(*r);
        continue;
      }
    }
    if (script_.constant) {
      out.predicted.push_back(*script_.constant);
      continue;
    }
    out.predicted.push_back(most_frequent_visible());
  }
  return out;
}

std::vector<std::string> MockBackend::split_word(const std::string& word,
                                                 const std::string& marker) const {
  if (script_.vocabulary.empty()) return {word};
  std::vector<std::string> pieces;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t best = 0;
    for (const auto& piece : script_.vocabulary) {
      if (piece.size() > best && piece.size() <= word.size() - pos &&
          word.compare(pos, piece.size(), piece) == 0) {
        best = piece.size();
      }
    }
    if (best == 0) {
      if (pos == 0) return {word};
      best = word.size() - pos;  // unmatched remainder stays one continuation piece
    }
    std::string piece = word.substr(pos, best);
    pieces.push_back(pos == 0 ? piece : marker + piece);
    pos += best;
  }
  return pieces;
}

std::vector<std::string> MockBackend::tokenize_impl(std::string_view text,
                                                    const BackendDescriptor& d) const {
  if (text::trim(text).empty()) {
    throw BackendError(BackendErrorKind::kValidation, "tokenize: empty text");
  }
  const std::string input = d.lowercase ? text::to_lower(text) : std::string(text);
  std::vector<std::string> out;
  for (auto word : text::split_whitespace(input)) {
    for (auto& piece : split_word(std::string(word), d.continuation_marker)) {
      out.push_back(std::move(piece));
    }
  }
  return out;
}

std::vector<std::string> MockBackend::tokenize(std::string_view text, std::string_view model_id) const {
  ++tokenize_calls_;
  return tokenize_impl(text, find_model(model_id));
}

EmbeddingMatrix MockBackend::embed_tokens(std::string_view text, std::string_view model_id) const {
  ++embed_calls_;
  const BackendDescriptor& d = find_model(model_id);
  const auto tokens = tokenize_impl(text, d);

  EmbeddingMatrix m;
  m.rows = tokens.size();
  m.dim = d.embedding_dimension;
  m.data.assign(m.rows * m.dim, 0.0f);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto row = m.row(i);
    if (auto it = script_.embeddings.find(tokens[i]); it != script_.embeddings.end()) {
      if (it->second.size() != m.dim) {
        throw std::invalid_argument("scripted embedding for '" + tokens[i] + "' has wrong dimension");
      }
      std::copy(it->second.begin(), it->second.end(), row.begin());
    } else {
      std::mt19937_64 rng(fnv1a64(d.model_id, tokens[i]));
      for (float& x : row) {
        // uniform in [-1, 1) from the top 24 bits; portable across standard libraries
        x = static_cast<float>(static_cast<double>(rng() >> 40) / 8388608.0 - 1.0);
      }
    }
    normalize(row);
  }
  return m;
}

}  // namespace clozeval::lm
