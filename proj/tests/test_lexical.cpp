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

#include <cmath>
#include <random>

#include "clozeval/lexical/bertscore.hpp"
#include "clozeval/lexical/bleu.hpp"
#include "clozeval/lexical/js_similarity.hpp"
#include "clozeval/lexical/ngrams.hpp"
#include "clozeval/lexical/rouge.hpp"
#include "clozeval/lm/mock_backend.hpp"
#include "clozeval/simd/kernels.hpp"
#include "oracles.hpp"

using namespace clozeval;
using namespace clozeval::lexical;

namespace {

std::vector<Tokens> all_sequences(std::size_t max_len) {
  std::vector<Tokens> out;
  std::vector<Tokens> frontier = {{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Tokens> next;
    for (const auto& t : frontier) {
      for (const char* w : {"x", "y", "z"}) {
        auto u = t;
        u.push_back(w);
        next.push_back(u);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

Tokens random_sequence(std::mt19937_64& rng, std::size_t max_len) {
  Tokens t(std::uniform_int_distribution<std::size_t>(1, max_len)(rng));
  for (auto& w : t) w = std::string(1, static_cast<char>('x' + std::uniform_int_distribution<int>(0, 2)(rng)));
  return t;
}

std::vector<float> basis(std::initializer_list<float> head) {
  std::vector<float> v(32, 0.0f);
  std::copy(head.begin(), head.end(), v.begin());
  return v;
}

}  // namespace

TEST_CASE("lexical tokens are lowercased unicode words") {
  CHECK(lexical_tokens("Die Straße, DIE  Bahn!") == Tokens{"die", "straße", "die", "bahn"});
  CHECK(lexical_tokens("...").empty());
}

TEST_CASE("rouge hand examples") {
  const auto r1 = rouge_n("a b c", "a b d", 1);
  CHECK(r1.precision == doctest::Approx(2.0 / 3.0));
  CHECK(r1.recall == doctest::Approx(2.0 / 3.0));
  CHECK(r1.f1 == doctest::Approx(2.0 / 3.0));
  CHECK(rouge_n("a b", "c d", 2).f1 == 0.0);
  CHECK(rouge_n("a", "a b", 2) == PrfScore{});
  CHECK(rouge_n("x y z", "x y z", 2) == PrfScore{1.0, 1.0, 1.0});
  const auto l = rouge_l("a b c d", "a c b d");
  CHECK(l.precision == 0.75);
  CHECK(l.recall == 0.75);
  CHECK(rouge_l("a b", "c d").f1 == 0.0);
  CHECK(rouge_l("Haus", "haus").f1 == 1.0);
}

TEST_CASE("rouge matches the enumeration oracles on short texts") {
  const auto seqs = all_sequences(4);
  for (const auto& a : seqs) {
    for (const auto& b : seqs) {
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto got = rouge_n(a, b, static_cast<int>(n));
        const auto want = oracle::rouge_n(a, b, n);
        REQUIRE(got.precision == doctest::Approx(want.p).epsilon(1e-12));
        REQUIRE(got.recall == doctest::Approx(want.r).epsilon(1e-12));
        REQUIRE(got.f1 == doctest::Approx(want.f).epsilon(1e-12));
      }
      REQUIRE(lcs_length(a, b) == oracle::lcs_exhaustive(a, b));
    }
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const auto a = random_sequence(rng, 8);
    const auto b = random_sequence(rng, 8);
    const auto want = oracle::rouge_l(a, b);
    const auto got = rouge_l(a, b);
    REQUIRE(got.f1 == doctest::Approx(want.f).epsilon(1e-12));
    REQUIRE(rouge_n(a, b, 2).f1 == doctest::Approx(oracle::rouge_n(a, b, 2).f).epsilon(1e-12));
  }
}

TEST_CASE("rouge swaps precision and recall under argument swap") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_sequence(rng, 8);
    const auto b = random_sequence(rng, 8);
    for (int n = 1; n <= 3; ++n) {
      const auto ab = rouge_n(a, b, n);
      const auto ba = rouge_n(b, a, n);
      CHECK(ab.precision == ba.recall);
      CHECK(ab.recall == ba.precision);
    }
    CHECK(rouge_l(a, b).precision == rouge_l(b, a).recall);
  }
}

TEST_CASE("multi-reference rouge takes the best reference") {
  const std::vector<std::string> refs = {"völlig anders", "das haus ist rot"};
  CHECK(rouge_n_max("Das Haus ist rot.", refs, 1).f1 == 1.0);
  CHECK(rouge_l_max("Das Haus", {}) == PrfScore{});
}

TEST_CASE("whitespace and punctuation do not matter") {
  CHECK(rouge_n("a  b\n c", "a b c", 1).f1 == 1.0);
  CHECK(bleu("Das  Haus ist\trot", std::vector<std::string>{"das haus ist rot"}) == 1.0);
  CHECK(js_similarity("rot , rot", "rot") == 1.0);
}

TEST_CASE("bleu") {
  const std::vector<std::string> ref = {"der schnelle braune fuchs springt"};
  CHECK(bleu("der schnelle braune fuchs springt", ref) == 1.0);
  CHECK(bleu("a b c", std::vector<std::string>{"a b c"}) == 1.0);
  CHECK(bleu("a b c", std::vector<std::string>{"a b c d"}) > 0.0);
  CHECK(bleu("", ref) == 0.0);
  CHECK_THROWS_AS(bleu("a", std::vector<std::string>{}), std::invalid_argument);

  // clipped unigram precision 1/4, all higher orders smoothed
  const Tokens cand = {"a", "a", "a", "a"};
  const std::vector<Tokens> refs = {{"a", "b", "c", "d"}};
  const double expected = std::exp((std::log(0.25) + std::log(1.0 / 4.0) + std::log(1.0 / 3.0) + std::log(1.0 / 2.0)) / 4.0);
  CHECK(bleu(cand, refs) == doctest::Approx(expected).epsilon(1e-12));
  BleuOptions plain;
  plain.smoothing = BleuSmoothing::kNone;
  CHECK(bleu(cand, refs, plain) == 0.0);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_sequence(rng, 8);
    const auto b = random_sequence(rng, 8);
    REQUIRE(bleu(a, std::vector<Tokens>{b}) == doctest::Approx(oracle::bleu(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("bleu brevity penalty uses the closest reference") {
  const Tokens cand = {"a", "b"};
  const std::vector<Tokens> refs = {{"a", "b", "c", "d", "e", "f"}, {"a", "b", "x"}};
  const double p = std::exp((std::log(1.0) + std::log(1.0) + std::log(1.0 / 1.0) + std::log(1.0 / 1.0)) / 4.0);
  CHECK(bleu(cand, refs) == doctest::Approx(std::exp(1.0 - 3.0 / 2.0) * p).epsilon(1e-12));
}

TEST_CASE("jensen-shannon similarity") {
  CHECK(js_similarity("das Haus", "das Haus") == 1.0);
  CHECK(js_similarity("alpha beta", "gamma delta") == 0.0);
  // P = {a:1}, Q = {a:1/2, b:1/2}, M = {a:3/4, b:1/4}
  const double jsd = 0.5 * std::log2(1.0 / 0.75) + 0.5 * (0.5 * std::log2(0.5 / 0.75) + 0.5 * std::log2(0.5 / 0.25));
  CHECK(js_similarity("a", "a b") == doctest::Approx(1.0 - jsd).epsilon(1e-12));
  CHECK_THROWS_AS(word_distribution("!!"), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_sequence(rng, 8);
    const auto b = random_sequence(rng, 8);
    std::string sa, sb;
    for (const auto& w : a) sa += w + " ";
    for (const auto& w : b) sb += w + " ";
    const double s = js_similarity(sa, sb);
    REQUIRE(s == js_similarity(sb, sa));
    REQUIRE(s >= 0.0);
    REQUIRE(s <= 1.0);
    REQUIRE(s == doctest::Approx(1.0 - oracle::js_divergence(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("ngram helpers") {
  const Tokens t = {"a", "b", "a", "b"};
  const auto c = count_ngrams(t, 2);
  CHECK(c.total == 3);
  CHECK(clipped_overlap(c, count_ngrams(Tokens{"a", "b"}, 2)) == 1);
  CHECK(count_ngrams(t, 5).total == 0);
}

TEST_CASE("bertscore") {
  lm::MockScript s;
  s.embeddings["a"] = basis({1.0f, 0.0f});
  s.embeddings["b"] = basis({0.0f, 1.0f});
  s.embeddings["c"] = basis({0.6f, 0.8f});
  s.embeddings["d"] = basis({0.0f, 0.0f, 1.0f});
  lm::MockBackend mock(s);

  CHECK(bertscore_f("das Haus ist rot", "das Haus ist rot", mock) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(bertscore_f("a b", "d", mock) == doctest::Approx(0.0).epsilon(1e-7));
  // cosines a.c = 0.6, b.c = 0.8: P = 0.7, R = 0.8
  const auto p = bertscore("a b", "c", mock);
  CHECK(p.precision == doctest::Approx(0.7).epsilon(1e-6));
  CHECK(p.recall == doctest::Approx(0.8).epsilon(1e-6));
  CHECK(p.f1 == doctest::Approx(2 * 0.7 * 0.8 / 1.5).epsilon(1e-6));
  CHECK(bertscore_f_max("a b", std::vector<std::string>{"d", "c"}, mock) == doctest::Approx(p.f1).epsilon(1e-12));
  CHECK(bertscore_f_max("a", std::vector<std::string>{}, mock) == 0.0);
}

TEST_CASE("bertscore is the same on every kernel variant") {
  lm::MockBackend mock;
  const auto a = mock.embed_tokens("der schnelle braune fuchs springt über den zaun", lm::kGermanCased);
  const auto b = mock.embed_tokens("ein fuchs springt", lm::kGermanCased);
  const auto ref = bertscore_from_embeddings(a, b, *simd::table_for(simd::Isa::kScalar));
  for (auto isa : simd::available_isas()) {
    const auto got = bertscore_from_embeddings(a, b, *simd::table_for(isa));
    CHECK(got.f1 == doctest::Approx(ref.f1).epsilon(1e-6));
  }
}
