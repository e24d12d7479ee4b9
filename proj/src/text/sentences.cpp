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

#include "clozeval/text/sentences.hpp"

#include <algorithm>
#include <cctype>

#include "clozeval/text/unicode.hpp"

namespace clozeval::text {

namespace {

bool is_terminal(char c) noexcept { return c == '.' || c == '!' || c == '?'; }
bool is_closer(char c) noexcept { return c == '"' || c == '\'' || c == ')' || c == ']'; }
bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// The whitespace-delimited word ending at `end` (exclusive), with leading
// opening punctuation removed.
std::string_view word_before(std::string_view s, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !is_space(s[begin - 1])) --begin;
  std::string_view w = s.substr(begin, end - begin);
  while (!w.empty() && (w.front() == '(' || w.front() == '"' || w.front() == '\'' || w.front() == '[')) {
    w.remove_prefix(1);
  }
  return w;
}

bool is_number_with_dot(std::string_view w) {
  if (w.size() < 2 || w.back() != '.') return false;
  return std::all_of(w.begin(), w.end() - 1, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

const std::vector<std::string>& default_german_abbreviations() {
  static const std::vector<std::string> list = {
      "z.B.", "ca.",  "bzw.",  "Dr.",  "Nr.",  "usw.", "d.h.", "u.a.", "evtl.", "ggf.",
      "inkl.", "vgl.", "etc.", "Str.", "Tel.", "Mio.", "Mrd.", "Prof.", "z.T.", "u.U.",
      "bspw.", "sog.", "zzgl.", "Hr.",  "Fr.",  "Abs.", "max.", "min.", "mind.", "incl."};
  return list;
}

std::vector<std::string> split_sentences(std::string_view text) {
  return split_sentences(text, default_german_abbreviations());
}

std::vector<std::string> split_sentences(std::string_view text,
                                         const std::vector<std::string>& abbreviations) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string_view piece = trim(text.substr(begin, end - begin));
    if (!piece.empty()) out.emplace_back(piece);
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    const std::size_t first_terminal = i;
    std::size_t j = i;
    while (j < text.size() && is_terminal(text[j])) ++j;
    const std::size_t last_terminal = j - 1;
    while (j < text.size() && is_closer(text[j])) ++j;

    std::size_t k = j;
    bool newline = false;
    while (k < text.size() && is_space(text[k])) {
      newline = newline || text[k] == '\n';
      ++k;
    }
    const bool at_end = k == text.size();
    const bool has_space = k > j;
    bool boundary = at_end || (has_space && (newline || starts_with_uppercase(text.substr(k))));

    if (boundary && !at_end && first_terminal == last_terminal && text[first_terminal] == '.') {
      std::string_view w = word_before(text, first_terminal + 1);
      if (std::find(abbreviations.begin(), abbreviations.end(), w) != abbreviations.end() ||
          is_number_with_dot(w)) {
        boundary = newline;
      }
    }

    if (boundary) {
      emit(start, j);
      start = k;
    }
    i = j;
  }
  emit(start, text.size());
  return out;
}

}  // namespace clozeval::text
