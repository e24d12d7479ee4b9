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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "clozeval/error.hpp"
#include "clozeval/stats/anderson_darling.hpp"
#include "clozeval/stats/correlation_report.hpp"
#include "clozeval/stats/groups.hpp"
#include "clozeval/stats/spearman.hpp"
#include "oracles.hpp"

using namespace clozeval;
using namespace clozeval::stats;

namespace {

// Reference values computed offline with scipy.stats (spearmanr, anderson).
// Normal quantiles at (i - 0.5) / 20, i = 1..20.
const std::vector<double> kQuasiNormal20 = {
    -1.9599639845400545, -1.4395314709384563, -1.1503493803760079, -0.9345892910734802, -0.7554150263604693,
    -0.5977601260424784, -0.45376219016987945, -0.31863936396437514, -0.18911842627279252, -0.06270677794321385,
    0.06270677794321385, 0.18911842627279238, 0.31863936396437514, 0.45376219016987956, 0.5977601260424784,
    0.7554150263604693, 0.93458929107348, 1.1503493803760079, 1.4395314709384563, 1.959963984540054};
constexpr double kQuasiNormal20A2Star = 0.046176349284197435;
constexpr double kRamp20A2Star = 0.23025716107772976;
constexpr double kRamp100A2Star = 1.0920810679519337;
constexpr double kExpQuantile30A2Star = 1.4027050898787787;

std::vector<double> ramp(int n) {
  std::vector<double> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

corpus::CorpusRecord rec(std::string id, int source_words, int summary_words) {
  corpus::CorpusRecord r;
  r.id = std::move(id);
  for (int i = 0; i < source_words; ++i) r.source += "w ";
  for (int i = 0; i < summary_words; ++i) r.summary += "s ";
  return r;
}

}  // namespace

TEST_CASE("average ranks") {
  CHECK(average_ranks(std::vector<double>{10, 20, 20, 5}) == std::vector<double>{2, 3.5, 3.5, 1});
  CHECK(average_ranks(std::vector<double>{1, 1, 1}) == std::vector<double>{2, 2, 2});
}

TEST_CASE("spearman reference values") {
  auto r = spearman(std::vector<double>{1, 2, 2, 4}, std::vector<double>{1, 3, 2, 4});
  CHECK(r.rho == doctest::Approx(0.9486832980505139).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(0.05131670194948612).epsilon(1e-9));
  CHECK(r.rho == doctest::Approx(oracle::spearman({1, 2, 2, 4}, {1, 3, 2, 4})).epsilon(1e-12));

  r = spearman(std::vector<double>{3.1, 1.2, 5.5, 2.0, 4.4, 6.1, 0.5, 7.7, 2.0, 9.0, 8.8, 3.3},
               std::vector<double>{2, 1, 4, 3, 5, 7, 1, 6, 2, 9, 10, 3});
  CHECK(r.rho == doctest::Approx(0.9542312675698356).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(1.4644505935751902e-06).epsilon(1e-9));
  CHECK(r.n == 12);
}

TEST_CASE("spearman p-value methods") {
  const std::vector<double> x = {1, 2, 3, 4, 5, 6};
  const std::vector<double> y = {2, 1, 4, 3, 6, 5};
  const auto t = spearman(x, y);
  CHECK(t.rho == doctest::Approx(0.8285714285714287).epsilon(1e-12));
  CHECK(t.p_value == doctest::Approx(0.04156268221574334).epsilon(1e-9));
  const auto exact = spearman(x, y, PValueMethod::kExactPermutation);
  CHECK(exact.p_value == doctest::Approx(42.0 / 720.0).epsilon(1e-12));
  CHECK_THROWS_AS(spearman(ramp(11), ramp(11), PValueMethod::kExactPermutation), std::invalid_argument);
}

TEST_CASE("spearman edge cases") {
  CHECK(spearman(ramp(5), ramp(5)).rho == 1.0);
  CHECK(spearman(ramp(5), ramp(5)).p_value == 0.0);
  auto rev = ramp(5);
  std::reverse(rev.begin(), rev.end());
  CHECK(spearman(ramp(5), rev).rho == -1.0);
  CHECK_THROWS_AS(spearman(ramp(4), std::vector<double>{2, 2, 2, 2}), StatisticsError);
  CHECK_THROWS_AS(spearman(ramp(4), ramp(5)), std::invalid_argument);
  CHECK_THROWS_AS(spearman(ramp(2), ramp(2)), std::invalid_argument);
}

TEST_CASE("spearman properties on random vectors") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> len(3, 20);
  std::uniform_int_distribution<int> small(0, 6);  // frequent ties
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = len(rng);
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = small(rng);
    for (auto& v : y) v = small(rng) + 0.5 * small(rng);
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; }) ||
        std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) {
      continue;
    }
    const auto r = spearman(x, y);
    REQUIRE(std::abs(r.rho - oracle::spearman(x, y)) <= 1e-12);
    REQUIRE(r.p_value >= 0.0);
    REQUIRE(r.p_value <= 1.0);
    REQUIRE(spearman(y, x).rho == r.rho);

    std::vector<double> neg(y), mono(x);
    for (auto& v : neg) v = -v;
    for (auto& v : mono) v = std::exp(v) * 3.0 + 7.0;
    REQUIRE(spearman(x, neg).rho == -r.rho);
    REQUIRE(spearman(mono, y).rho == r.rho);
  }
}

TEST_CASE("anderson-darling reference values") {
  const auto q = anderson_darling_normal(kQuasiNormal20);
  CHECK(q.a2_star == doctest::Approx(kQuasiNormal20A2Star).epsilon(1e-9));
  CHECK_FALSE(q.reject_at_5pct);

  const auto r20 = anderson_darling_normal(ramp(20));
  CHECK(r20.a2_star == doctest::Approx(kRamp20A2Star).epsilon(1e-9));
  CHECK_FALSE(r20.reject_at_5pct);  // 20 evenly spaced points are too few to reject

  const auto r100 = anderson_darling_normal(ramp(100));
  CHECK(r100.a2_star == doctest::Approx(kRamp100A2Star).epsilon(1e-9));
  CHECK(r100.reject_at_5pct);

  std::vector<double> expo;
  for (int i = 1; i <= 30; ++i) expo.push_back(-std::log(1.0 - (i - 0.5) / 30.0));
  const auto e = anderson_darling_normal(expo);
  CHECK(e.a2_star == doctest::Approx(kExpQuantile30A2Star).epsilon(1e-9));
  CHECK(e.reject_at_5pct);

  CHECK(r100.a2_star == doctest::Approx(r100.a2 * (1 + 0.75 / 100 + 2.25 / 10000)).epsilon(1e-15));
}

TEST_CASE("anderson-darling affine invariance") {
  const auto base = anderson_darling_normal(ramp(100)).a2_star;
  for (double scale : {0.25, 2.0, 1024.0}) {
    for (double shift : {0.0, -3.0, 64.0}) {
      auto v = ramp(100);
      for (auto& x : v) x = x * scale + shift;
      CHECK(anderson_darling_normal(v).a2_star == base);
    }
  }
  auto flipped = ramp(100);
  for (auto& x : flipped) x = -x;
  CHECK(anderson_darling_normal(flipped).a2_star == base);

  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  std::vector<double> s(40);
  for (auto& x : s) x = nd(rng);
  auto t = s;
  for (auto& x : t) x = 3.7 * x - 11.0;
  CHECK(anderson_darling_normal(t).a2_star == doctest::Approx(anderson_darling_normal(s).a2_star).epsilon(1e-12));
}

TEST_CASE("anderson-darling input errors") {
  CHECK_THROWS_AS(anderson_darling_normal(std::vector<double>(10, 3.0)), StatisticsError);
  CHECK_THROWS_AS(anderson_darling_normal(ramp(7)), StatisticsError);
}

TEST_CASE("split by mean") {
  std::vector<corpus::CorpusRecord> rs = {rec("a", 30, 10), rec("b", 30, 20)};
  auto s = split_by_mean(rs, SplitCriterion::kSummaryLength);
  CHECK(s.threshold == 15.0);
  CHECK(s.low_ids == std::vector<std::string>{"a"});
  CHECK(s.high_ids == std::vector<std::string>{"b"});

  std::vector<corpus::CorpusRecord> same = {rec("a", 10, 1), rec("b", 10, 1), rec("c", 10, 1)};
  s = split_by_mean(same, SplitCriterion::kCompression);
  CHECK(s.low_ids.empty());
  CHECK(s.high_ids.size() == 3);
  CHECK(criterion_value(rec("x", 20, 5), SplitCriterion::kCompression) == 0.25);
  CHECK_THROWS_AS(split_by_mean(std::vector<corpus::CorpusRecord>{rec("a", 1, 1)}, SplitCriterion::kSourceLength),
                  std::invalid_argument);
}

TEST_CASE("split membership depends only on value and mean") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> words(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<corpus::CorpusRecord> rs;
    const int n = 2 + trial % 9;
    for (int i = 0; i < n; ++i) rs.push_back(rec("r" + std::to_string(i), words(rng), words(rng)));
    for (auto c : kAllCriteria) {
      const auto s = split_by_mean(rs, c);
      REQUIRE(s.low_ids.size() + s.high_ids.size() == rs.size());
      std::vector<double> values;
      for (const auto& r : rs) values.push_back(criterion_value(r, c));
      REQUIRE(s.threshold == stable_mean(values));
      for (std::size_t i = 0; i < rs.size(); ++i) {
        const bool high = std::find(s.high_ids.begin(), s.high_ids.end(), rs[i].id) != s.high_ids.end();
        const bool low = std::find(s.low_ids.begin(), s.low_ids.end(), rs[i].id) != s.low_ids.end();
        REQUIRE(high != low);
        REQUIRE(high == (values[i] >= s.threshold));
      }
    }
  }
  CHECK(stable_mean(std::vector<double>(3, 0.1)) == 0.1);
}

TEST_CASE("correlation report joins ids and skips thin pairs") {
  blanc::ScoreMatrix m({"a", "b", "c", "d", "e"}, {"ROUGE-1", "JS", "thin"});
  const double metric[] = {0.1, 0.4, 0.2, 0.9, 0.5};
  for (std::size_t i = 0; i < 5; ++i) {
    m.set(i, 0, metric[i]);
    m.set(i, 1, 1.0);
    if (i < 2) {
      m.set(i, 2, static_cast<double>(i));
    } else {
      m.set_missing(i, 2, "failed");
    }
  }
  corpus::MosTable t;
  t.factor = corpus::Factor::kSummaryInformativeness;
  t.rater_kind = corpus::RaterKind::kExpert;
  t.values = {{"a", 1.0}, {"b", 3.0}, {"c", 2.0}, {"d", 5.0}, {"e", 4.0}, {"zzz", 2.0}};
  const std::vector<corpus::MosTable> tables = {t};

  const auto report = correlation_report(m, tables);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].metric_name == "ROUGE-1");
  CHECK(report.entries[0].rho == 1.0);
  CHECK(report.entries[0].significant);
  CHECK(report.entries[0].n == 5);
  REQUIRE(report.skipped.size() == 2);
  CHECK(report.skipped[0].metric_name == "JS");  // constant column
  CHECK(report.skipped[1].reason.find("only 2") != std::string::npos);

  const std::set<std::string> subset = {"a", "b", "c"};
  ReportOptions o;
  o.restrict_ids = &subset;
  CHECK(correlation_report(m, tables, o).entries.at(0).n == 3);
  o.alpha = 0.0;
  CHECK_THROWS_AS(correlation_report(m, tables, o), std::invalid_argument);

  std::ostringstream csv;
  write_report_csv(csv, report.entries);
  CHECK(csv.str() == "metric,factor,rater_kind,rho,p,significant,n\nROUGE-1,summary_informativeness,expert,1,0,true,5\n");
  std::ostringstream plot;
  write_plot_csv(plot, report.entries, t.factor, t.rater_kind);
  CHECK(plot.str() == "metric,rho,p,significant,marker\nROUGE-1,1,0,true,\n");
}

TEST_CASE("significance flag follows alpha") {
  blanc::ScoreMatrix m({"a", "b", "c", "d"}, {"m"});
  const double v[] = {1, 2, 4, 3};
  for (std::size_t i = 0; i < 4; ++i) m.set(i, 0, v[i]);
  corpus::MosTable t;
  t.values = {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}};
  const auto e = correlation_report(m, std::vector<corpus::MosTable>{t}).entries.at(0);
  CHECK(e.rho == doctest::Approx(0.8));
  CHECK_FALSE(e.significant);
  CHECK(e.significant == (e.p_value < 0.05));
  std::ostringstream plot;
  write_plot_csv(plot, std::vector<CorrelationEntry>{e}, t.factor, t.rater_kind);
  CHECK(plot.str().find(",false,*\n") != std::string::npos);
}

TEST_CASE("rank configs") {
  using corpus::Factor;
  using corpus::RaterKind;
  std::vector<CorrelationEntry> r = {
      {"B_L5_Ll1_Lf1", Factor::kSummaryInformativeness, RaterKind::kExpert, 0.3, 0.1, false, 50},
      {"B_L4_Ll2_Lf1", Factor::kSummaryInformativeness, RaterKind::kExpert, 0.5, 0.01, true, 50},
      {"B_L6_Ll2_Lf1", Factor::kSummaryInformativeness, RaterKind::kExpert, 0.4, 0.02, true, 50},
      {"B_L4_Ll1_Lf1", Factor::kSummaryInformativeness, RaterKind::kExpert, 0.4, 0.02, true, 50},
      {"B_L4_Ll2_Lf100", Factor::kPostUsefulness, RaterKind::kExpert, 0.9, 0.0, true, 50},
      {"B_L4_Ll2_Lf100", Factor::kSummaryInformativeness, RaterKind::kCrowd, 0.9, 0.0, true, 50}};
  const auto ranked = rank_configs(r, Factor::kSummaryInformativeness, RaterKind::kExpert);
  REQUIRE(ranked.size() == 4);
  CHECK(ranked[0].first == "B_L4_Ll2_Lf1");
  CHECK(ranked[1].first == "B_L4_Ll1_Lf1");
  CHECK(ranked[2].first == "B_L6_Ll2_Lf1");
  CHECK(ranked[3].first == "B_L5_Ll1_Lf1");
  CHECK(rank_configs(r, Factor::kFocus, RaterKind::kExpert).empty());
}

TEST_CASE("subgroup reports cover every criterion") {
  std::vector<corpus::CorpusRecord> rs;
  blanc::ScoreMatrix m({"a", "b", "c", "d", "e", "f", "g", "h"}, {"m"});
  corpus::MosTable t;
  for (int i = 0; i < 8; ++i) {
    const std::string id(1, static_cast<char>('a' + i));
    rs.push_back(rec(id, 10 + i, 1 + (i % 4)));
    m.set(i, 0, i);
    t.values[id] = i;
  }
  const auto groups = subgroup_reports(m, std::vector<corpus::MosTable>{t}, rs);
  REQUIRE(groups.size() == 3);
  for (const auto& g : groups) {
    CHECK(g.split.low_ids.size() + g.split.high_ids.size() == 8);
    for (const auto& e : g.low.entries) CHECK(e.rho == 1.0);
    for (const auto& e : g.high.entries) CHECK(e.rho == 1.0);
  }
  std::ostringstream csv;
  write_subgroup_csv(csv, groups);
  CHECK(csv.str().rfind("criterion,group,threshold,size,metric", 0) == 0);
  CHECK(csv.str().find("source_length,low,13.5,4,m,") != std::string::npos);
}
