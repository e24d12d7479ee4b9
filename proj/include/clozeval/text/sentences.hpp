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

#include <string>
#include <string_view>
#include <vector>

namespace clozeval::text {

// Abbreviations that end in '.' but never terminate a sentence.
const std::vector<std::string>& default_german_abbreviations();

// Rule-based sentence splitter.
//
// A sentence ends after a run of terminal punctuation ('.', '!', '?',
// optionally followed by closing quotes/brackets) when the run is followed
// by whitespace and then either an uppercase letter or a line break, or by
// the end of the text. A '.' does not end a sentence when the word it
// terminates is a listed abbreviation or a bare number (German ordinals such
// as "3. Mai"). Returned sentences are trimmed and non-empty; text without
// any boundary comes back as a single sentence.
std::vector<std::string> split_sentences(std::string_view text);
std::vector<std::string> split_sentences(std::string_view text,
                                         const std::vector<std::string>& abbreviations);

}  // namespace clozeval::text
