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

#include "clozeval/corpus/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "clozeval/error.hpp"
#include "clozeval/text/unicode.hpp"

namespace clozeval::corpus {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 9> kFactorNames = {
    "overall",          "grammaticality",      "non_redundancy",
    "referential_clarity", "focus",            "structure_coherence",
    "summary_usefulness", "post_usefulness",   "summary_informativeness"};

class LineContext {
 public:
  LineContext(const std::string& source, std::size_t line) : source_(source), line_(line) {}

  [[noreturn]] void fail(const std::string& message, const std::string& field = {}) const {
    throw InputError(source_ + ":" + std::to_string(line_) + ": " + message, source_, line_, field);
  }

  std::string normalized(const std::string& value, const std::string& field) const {
    if (!text::is_valid_utf8(value)) fail("field '" + field + "' is not valid UTF-8", field);
    return text::nfc(value);
  }

  std::string required_string(const json& obj, const std::string& field) const {
    auto it = obj.find(field);
    if (it == obj.end()) fail("missing required field '" + field + "'", field);
    if (!it->is_string()) fail("field '" + field + "' must be a string", field);
    return normalized(it->get<std::string>(), field);
  }

 private:
  const std::string& source_;
  std::size_t line_;
};

template <typename ParseLine>
void for_each_json_line(std::istream& in, const std::string& source, ParseLine&& parse_line) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    LineContext ctx(source, line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      ctx.fail(std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) ctx.fail("expected a JSON object");
    parse_line(obj, ctx);
  }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'", path.string());
  return in;
}

}  // namespace

std::string_view to_string(Factor f) noexcept { return kFactorNames[static_cast<std::size_t>(f)]; }

std::string_view to_string(RaterKind k) noexcept {
  return k == RaterKind::kExpert ? "expert" : "crowd";
}

std::optional<Factor> parse_factor(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kFactorNames.size(); ++i) {
    if (kFactorNames[i] == name) return static_cast<Factor>(i);
  }
  return std::nullopt;
}

std::optional<RaterKind> parse_rater_kind(std::string_view name) noexcept {
  if (name == "expert") return RaterKind::kExpert;
  if (name == "crowd") return RaterKind::kCrowd;
  return std::nullopt;
}

std::vector<CorpusRecord> parse_corpus(std::istream& in, const std::string& source_name) {
  std::vector<CorpusRecord> records;
  std::set<std::string> seen;
  for_each_json_line(in, source_name, [&](const json& obj, const LineContext& ctx) {
    CorpusRecord r;
    r.id = ctx.required_string(obj, "id");
    if (text::trim(r.id).empty()) ctx.fail("field 'id' is empty", "id");
    r.query = ctx.required_string(obj, "query");
    r.source = ctx.required_string(obj, "source");
    r.summary = ctx.required_string(obj, "summary");
    if (text::trim(r.source).empty()) ctx.fail("field 'source' is empty", "source");
    if (text::trim(r.summary).empty()) ctx.fail("field 'summary' is empty", "summary");

    if (auto it = obj.find("references"); it != obj.end()) {
      if (!it->is_array()) ctx.fail("field 'references' must be an array", "references");
      for (const auto& ref : *it) {
        if (!ref.is_string()) ctx.fail("field 'references' must contain strings", "references");
        r.references.push_back(ctx.normalized(ref.get<std::string>(), "references"));
      }
    }
    if (auto it = obj.find("language"); it != obj.end()) {
      if (!it->is_string()) ctx.fail("field 'language' must be a string", "language");
      r.language = it->get<std::string>();
    }
    if (!seen.insert(r.id).second) ctx.fail("duplicate id '" + r.id + "'", "id");
    records.push_back(std::move(r));
  });
  return records;
}

std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_corpus(in, path.string());
}

std::vector<AnnotationRecord> parse_annotations(std::istream& in, const std::string& source_name) {
  std::vector<AnnotationRecord> records;
  for_each_json_line(in, source_name, [&](const json& obj, const LineContext& ctx) {
    AnnotationRecord a;
    a.summary_id = ctx.required_string(obj, "summary_id");
    a.rater_id = ctx.required_string(obj, "rater_id");
    if (a.summary_id.empty()) ctx.fail("field 'summary_id' is empty", "summary_id");
    const std::string kind = ctx.required_string(obj, "rater_kind");
    auto parsed_kind = parse_rater_kind(kind);
    if (!parsed_kind) ctx.fail("unknown rater_kind '" + kind + "' (expected expert|crowd)", "rater_kind");
    a.rater_kind = *parsed_kind;

    auto it = obj.find("factors");
    if (it == obj.end()) ctx.fail("missing required field 'factors'", "factors");
    if (!it->is_object()) ctx.fail("field 'factors' must be an object", "factors");
    for (const auto& [name, value] : it->items()) {
      auto factor = parse_factor(name);
      if (!factor) ctx.fail("unknown factor '" + name + "'", name);
      if (!value.is_number_integer()) ctx.fail("score for '" + name + "' must be an integer", name);
      const auto score = value.get<long long>();
      if (score < 1 || score > 5) {
        ctx.fail("score " + std::to_string(score) + " for '" + name + "' outside [1,5]", name);
      }
      a.factors[*factor] = static_cast<int>(score);
    }
    records.push_back(std::move(a));
  });
  return records;
}

std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_annotations(in, path.string());
}

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records) {
  for (const auto& r : records) {
    json obj = {{"id", r.id},         {"query", r.query},           {"source", r.source},
                {"summary", r.summary}, {"references", r.references}, {"language", r.language}};
    out << obj.dump() << '\n';
  }
}

void write_annotations(std::ostream& out, std::span<const AnnotationRecord> records) {
  for (const auto& a : records) {
    json factors = json::object();
    for (const auto& [f, score] : a.factors) factors[std::string(to_string(f))] = score;
    json obj = {{"summary_id", a.summary_id},
                {"rater_id", a.rater_id},
                {"rater_kind", std::string(to_string(a.rater_kind))},
                {"factors", factors}};
    out << obj.dump() << '\n';
  }
}

const CorpusRecord* find_record(std::span<const CorpusRecord> corpus, std::string_view id) noexcept {
  for (const auto& r : corpus) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace clozeval::corpus
