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

// Thin UTF-8 helpers over ICU. All functions take and return UTF-8.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clozeval::text {

bool is_valid_utf8(std::string_view s) noexcept;

// Canonical composition (NFC). Throws std::invalid_argument on invalid UTF-8.
std::string nfc(std::string_view s);

// Full Unicode lowercase mapping (e.g. "ÄRGER" -> "ärger").
std::string to_lower(std::string_view s);

// Number of Unicode code points.
std::size_t code_point_count(std::string_view s) noexcept;

// True if the first code point of `s` is an uppercase letter.
bool starts_with_uppercase(std::string_view s) noexcept;

// Word segments per the Unicode word-boundary rules; punctuation, symbols
// and whitespace segments are dropped.
std::vector<std::string> unicode_words(std::string_view s);

std::string_view trim(std::string_view s) noexcept;

std::vector<std::string_view> split_whitespace(std::string_view s);

// Whitespace-delimited token count.
std::size_t word_count(std::string_view s);

}  // namespace clozeval::text
