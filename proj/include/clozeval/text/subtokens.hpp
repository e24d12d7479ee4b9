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
#include <string>
#include <string_view>
#include <vector>

namespace clozeval::text {

inline constexpr std::string_view kDefaultContinuationMarker = "##";

// Role of a subword token within its word.
//   kNormal: the word was not split; the token is the whole word.
//   kLead:   first piece of a word split into two or more pieces.
//   kFollow: any continuation piece of a split word.
enum class TokenKind { kNormal, kLead, kFollow };

const char* to_string(TokenKind kind) noexcept;

struct SubToken {
  std::string surface;  // continuation marker stripped
  TokenKind kind = TokenKind::kNormal;
  std::size_t effective_length = 0;  // code points of `surface`
  std::size_t word_index = 0;
};

struct SentenceTokens {
  std::size_t sentence_index = 0;
  std::vector<SubToken> tokens;
};

// Assigns token kinds to a model tokenizer's output. Continuation pieces
// carry `marker` as a prefix. Throws TokenizationError when the sequence
// starts with a continuation piece or a piece is empty after stripping.
// An empty marker disables continuation detection (every token is kNormal).
std::vector<SubToken> classify_tokens(const std::vector<std::string>& raw_tokens,
                                      std::string_view marker = kDefaultContinuationMarker);

// The token as the model tokenizer emitted it (marker re-attached to kFollow).
std::string raw_form(const SubToken& token, std::string_view marker = kDefaultContinuationMarker);

// Removes a leading continuation marker, if present.
std::string_view strip_marker(std::string_view token,
                              std::string_view marker = kDefaultContinuationMarker) noexcept;

}  // namespace clozeval::text
