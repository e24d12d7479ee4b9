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

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clozeval::corpus {

// One evaluation item: the query, the source post, the candidate summary and
// optional gold summaries. Text fields are NFC-normalized UTF-8.
struct CorpusRecord {
  std::string id;
  std::string query;
  std::string source;
  std::string summary;
  std::vector<std::string> references;
  std::string language = "de";

  bool operator==(const CorpusRecord&) const = default;
};

enum class RaterKind { kExpert, kCrowd };

// The nine quality factors of the annotation scheme. Only the three extrinsic
// ones (summary/post usefulness, summary informativeness) feed the default
// correlation reports.
enum class Factor {
  kOverall,
  kGrammaticality,
  kNonRedundancy,
  kReferentialClarity,
  kFocus,
  kStructureCoherence,
  kSummaryUsefulness,
  kPostUsefulness,
  kSummaryInformativeness,
};

inline constexpr std::array<Factor, 9> kAllFactors = {
    Factor::kOverall,           Factor::kGrammaticality,     Factor::kNonRedundancy,
    Factor::kReferentialClarity, Factor::kFocus,              Factor::kStructureCoherence,
    Factor::kSummaryUsefulness, Factor::kPostUsefulness,     Factor::kSummaryInformativeness};

inline constexpr std::array<Factor, 3> kExtrinsicFactors = {
    Factor::kSummaryUsefulness, Factor::kPostUsefulness, Factor::kSummaryInformativeness};

inline constexpr std::array<RaterKind, 2> kRaterKinds = {RaterKind::kCrowd, RaterKind::kExpert};

std::string_view to_string(Factor f) noexcept;
std::string_view to_string(RaterKind k) noexcept;
std::optional<Factor> parse_factor(std::string_view name) noexcept;
std::optional<RaterKind> parse_rater_kind(std::string_view name) noexcept;

// One rater's scores (1..5) for one summary.
struct AnnotationRecord {
  std::string summary_id;
  std::string rater_id;
  RaterKind rater_kind = RaterKind::kCrowd;
  std::map<Factor, int> factors;

  bool operator==(const AnnotationRecord&) const = default;
};

// JSONL ingestion. Errors are reported as clozeval::InputError carrying the
// source name and 1-based line number. Blank lines are skipped.
std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path);
std::vector<CorpusRecord> parse_corpus(std::istream& in, const std::string& source_name = "<stream>");

std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path);
std::vector<AnnotationRecord> parse_annotations(std::istream& in,
                                                const std::string& source_name = "<stream>");

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records);
void write_annotations(std::ostream& out, std::span<const AnnotationRecord> records);

const CorpusRecord* find_record(std::span<const CorpusRecord> corpus, std::string_view id) noexcept;

}  // namespace clozeval::corpus
