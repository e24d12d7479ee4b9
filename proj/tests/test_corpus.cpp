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

#include <doctest.h>

#include <sstream>

#include "clozeval/corpus/corpus.hpp"
#include "clozeval/corpus/mos.hpp"
#include "clozeval/error.hpp"

using namespace clozeval;
using namespace clozeval::corpus;

namespace {

std::vector<CorpusRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in, "mem.jsonl");
}

std::vector<AnnotationRecord> parse_ann(const std::string& text) {
  std::istringstream in(text);
  return parse_annotations(in, "ann.jsonl");
}

AnnotationRecord ann(std::string id, std::string rater, RaterKind kind, int si) {
  return {std::move(id), std::move(rater), kind, {{Factor::kSummaryInformativeness, si}}};
}

}  // namespace

TEST_CASE("corpus records parse and normalize") {
  const auto r = parse(
      "{\"id\":\"a\",\"query\":\"q\",\"source\":\"Mu\\u0308ller kommt.\",\"summary\":\"s\"}\n"
      "\n"
      "{\"id\":\"b\",\"query\":\"q\",\"source\":\"x\",\"summary\":\"y\",\"references\":[\"r1\",\"r2\"]}\n");
  REQUIRE(r.size() == 2);
  CHECK(r[0].source == "Müller kommt.");
  CHECK(r[0].references.empty());
  CHECK(r[0].language == "de");
  CHECK(r[1].references == std::vector<std::string>{"r1", "r2"});
  CHECK(find_record(r, "b") == &r[1]);
  CHECK(find_record(r, "c") == nullptr);
}

TEST_CASE("corpus errors carry line numbers") {
  try {
    parse("{\"id\":\"a\",\"query\":\"q\",\"source\":\"x\",\"summary\":\"y\"}\n{\"id\":\"b\",\"query\":\"q\"}\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
    CHECK(e.path() == "mem.jsonl");
    CHECK(std::string(e.what()).find("mem.jsonl:2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("not json\n"), InputError);
  CHECK_THROWS_AS(parse("{\"id\":\"a\",\"query\":\"q\",\"source\":\"x\",\"summary\":\"y\"}\n"
                        "{\"id\":\"a\",\"query\":\"q\",\"source\":\"x\",\"summary\":\"y\"}\n"),
                  InputError);
  CHECK_THROWS_AS(parse("{\"id\":\"a\",\"query\":\"q\",\"source\":\"\\u00ff\",\"summary\":\"\"}\n"), InputError);
  CHECK_THROWS_AS(load_corpus("/definitely/not/here.jsonl"), InputError);
}

TEST_CASE("corpus round trip") {
  const auto r = parse(
      "{\"id\":\"a\",\"query\":\"Frage\",\"source\":\"Quelle.\",\"summary\":\"Kurz.\",\"references\":[\"Ref\"]}\n");
  std::ostringstream out;
  write_corpus(out, r);
  CHECK(parse(out.str()) == r);
}

TEST_CASE("annotations parse and validate") {
  const auto a = parse_ann(
      "{\"summary_id\":\"a\",\"rater_id\":\"e1\",\"rater_kind\":\"expert\",\"factors\":{\"summary_informativeness\":4,"
      "\"post_usefulness\":2}}\n");
  REQUIRE(a.size() == 1);
  CHECK(a[0].rater_kind == RaterKind::kExpert);
  CHECK(a[0].factors.at(Factor::kSummaryInformativeness) == 4);
  CHECK_THROWS_AS(parse_ann("{\"summary_id\":\"a\",\"rater_id\":\"e\",\"rater_kind\":\"crowd\",\"factors\":{\"focus\":6}}\n"),
                  InputError);
  CHECK_THROWS_AS(parse_ann("{\"summary_id\":\"a\",\"rater_id\":\"e\",\"rater_kind\":\"crowd\",\"factors\":{\"focus\":2.5}}\n"),
                  InputError);
  CHECK_THROWS_AS(parse_ann("{\"summary_id\":\"a\",\"rater_id\":\"e\",\"rater_kind\":\"crowd\",\"factors\":{\"charm\":2}}\n"),
                  InputError);
  CHECK_THROWS_AS(parse_ann("{\"summary_id\":\"a\",\"rater_id\":\"e\",\"rater_kind\":\"boss\",\"factors\":{}}\n"),
                  InputError);

  std::ostringstream out;
  write_annotations(out, a);
  CHECK(parse_ann(out.str()) == a);
}

TEST_CASE("factor and rater names round trip") {
  for (auto f : kAllFactors) CHECK(parse_factor(to_string(f)) == f);
  for (auto k : kRaterKinds) CHECK(parse_rater_kind(to_string(k)) == k);
  CHECK_FALSE(parse_factor("nope").has_value());
}

TEST_CASE("mos is the arithmetic mean per summary") {
  std::vector<AnnotationRecord> a = {ann("x", "c1", RaterKind::kCrowd, 4), ann("x", "c2", RaterKind::kCrowd, 5),
                                     ann("x", "e1", RaterKind::kExpert, 2), ann("y", "c1", RaterKind::kCrowd, 1)};
  const auto crowd = aggregate_mos(a, Factor::kSummaryInformativeness, RaterKind::kCrowd);
  CHECK(crowd.values.at("x") == 4.5);
  CHECK(crowd.values.at("y") == 1.0);
  const auto expert = aggregate_mos(a, Factor::kSummaryInformativeness, RaterKind::kExpert);
  CHECK(expert.values.size() == 1);
  CHECK(expert.values.at("x") == 2.0);
  CHECK(aggregate_mos(a, Factor::kFocus, RaterKind::kCrowd).values.empty());
  CHECK(crowd.label() == "summary_informativeness/crowd");
}

TEST_CASE("mos is order independent and bounded") {
  std::vector<AnnotationRecord> a;
  for (int i = 0; i < 7; ++i) a.push_back(ann("x", "r" + std::to_string(i), RaterKind::kCrowd, 1 + (i * 3) % 5));
  const auto forward = aggregate_mos(a, Factor::kSummaryInformativeness, RaterKind::kCrowd);
  std::reverse(a.begin(), a.end());
  const auto backward = aggregate_mos(a, Factor::kSummaryInformativeness, RaterKind::kCrowd);
  CHECK(forward.values == backward.values);
  CHECK(forward.values.at("x") >= 1.0);
  CHECK(forward.values.at("x") <= 5.0);
}

TEST_CASE("median aggregation") {
  std::vector<AnnotationRecord> a = {ann("x", "1", RaterKind::kCrowd, 1), ann("x", "2", RaterKind::kCrowd, 5),
                                     ann("x", "3", RaterKind::kCrowd, 2)};
  CHECK(aggregate_mos(a, Factor::kSummaryInformativeness, RaterKind::kCrowd, Aggregation::kMedian).values.at("x") ==
        2.0);
}
