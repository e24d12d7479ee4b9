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
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clozeval/blanc/score_matrix.hpp"
#include "clozeval/corpus/corpus.hpp"
#include "clozeval/corpus/mos.hpp"
#include "clozeval/stats/groups.hpp"
#include "clozeval/stats/spearman.hpp"

namespace clozeval::stats {

inline constexpr double kDefaultAlpha = 0.05;

struct CorrelationEntry {
  std::string metric_name;
  corpus::Factor factor = corpus::Factor::kOverall;
  corpus::RaterKind rater_kind = corpus::RaterKind::kCrowd;
  double rho = 0.0;
  double p_value = 1.0;
  bool significant = false;  // p_value < alpha
  std::size_t n = 0;
};

// A (metric, table) pair that produced no entry.
struct SkippedPair {
  std::string metric_name;
  std::string table_label;
  std::string reason;
};

struct CorrelationReport {
  std::vector<CorrelationEntry> entries;
  std::vector<SkippedPair> skipped;
};

struct ReportOptions {
  double alpha = kDefaultAlpha;
  PValueMethod p_method = PValueMethod::kTApproximation;
  // When set, only these ids take part.
  const std::set<std::string>* restrict_ids = nullptr;
};

// One entry per (metric column, table), metric-major in column order. Ids are
// joined by intersection and missing cells are dropped pairwise. Pairs with
// fewer than 3 ids or a constant side are skipped with a reason.
CorrelationReport correlation_report(const blanc::ScoreMatrix& matrix, std::span<const corpus::MosTable> tables,
                                     const ReportOptions& options = {});

// Entries for (factor, rater_kind) ordered by rho descending, ties by name.
std::vector<std::pair<std::string, double>> rank_configs(std::span<const CorrelationEntry> report,
                                                         corpus::Factor factor, corpus::RaterKind rater_kind);

struct SubgroupReport {
  GroupSplit split;
  CorrelationReport low;
  CorrelationReport high;
};

// Mean split of `records` for each criterion, with a report per side.
std::vector<SubgroupReport> subgroup_reports(const blanc::ScoreMatrix& matrix,
                                             std::span<const corpus::MosTable> tables,
                                             std::span<const corpus::CorpusRecord> records,
                                             const ReportOptions& options = {});

// CSV columns: metric,factor,rater_kind,rho,p,significant,n
void write_report_csv(std::ostream& out, std::span<const CorrelationEntry> entries);

// Bar-chart data for one (factor, rater_kind): metric,rho,p,significant,marker
// where marker is "*" for a non-significant correlation.
void write_plot_csv(std::ostream& out, std::span<const CorrelationEntry> entries, corpus::Factor factor,
                    corpus::RaterKind rater_kind);

// CSV columns: criterion,group,threshold,size,metric,factor,rater_kind,rho,p,significant,n
void write_subgroup_csv(std::ostream& out, std::span<const SubgroupReport> reports);

}  // namespace clozeval::stats
