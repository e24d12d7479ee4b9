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

#include "clozeval/text/subtokens.hpp"

#include "clozeval/error.hpp"
#include "clozeval/text/unicode.hpp"

namespace clozeval::text {

const char* to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::kNormal:
      return "normal";
    case TokenKind::kLead:
      return "lead";
    case TokenKind::kFollow:
      return "follow";
  }
  return "unknown";
}

std::string_view strip_marker(std::string_view token, std::string_view marker) noexcept {
  if (!marker.empty() && token.starts_with(marker)) token.remove_prefix(marker.size());
  return token;
}

std::vector<SubToken> classify_tokens(const std::vector<std::string>& raw_tokens,
                                      std::string_view marker) {
  auto is_marked = [&](const std::string& t) { return !marker.empty() && t.starts_with(marker); };

  std::vector<SubToken> out;
  out.reserve(raw_tokens.size());
  std::size_t word = 0;
  for (std::size_t i = 0; i < raw_tokens.size(); ++i) {
    const std::string& raw = raw_tokens[i];
    const bool marked = is_marked(raw);
    if (marked && i == 0) {
      throw TokenizationError("malformed tokenization: sequence starts with continuation piece '" +
                              raw + "'");
    }
    SubToken tok;
    tok.surface = std::string(strip_marker(raw, marker));
    if (tok.surface.empty()) {
      throw TokenizationError("malformed tokenization: empty token at position " +
                              std::to_string(i));
    }
    tok.effective_length = code_point_count(tok.surface);
    if (marked) {
      tok.kind = TokenKind::kFollow;
    } else {
      if (i > 0) ++word;
      const bool split = i + 1 < raw_tokens.size() && is_marked(raw_tokens[i + 1]);
      tok.kind = split ? TokenKind::kLead : TokenKind::kNormal;
    }
    tok.word_index = word;
    out.push_back(std::move(tok));
  }
  return out;
}

std::string raw_form(const SubToken& token, std::string_view marker) {
  if (token.kind == TokenKind::kFollow) return std::string(marker) + token.surface;
  return token.surface;
}

}  // namespace clozeval::text
