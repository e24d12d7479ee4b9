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

#include "clozeval/stats/correlation_report.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "clozeval/error.hpp"

namespace clozeval::stats {

using blanc::csv_field;
using blanc::format_double;

namespace {

std::string entry_row(const CorrelationEntry& e) {
  std::string row = csv_field(e.metric_name);
  row += ',';
  row += corpus::to_string(e.factor);
  row += ',';
  row += corpus::to_string(e.rater_kind);
  row += ',' + format_double(e.rho) + ',' + format_double(e.p_value) + ',';
  row += e.significant ? "true" : "false";
  row += ',' + std::to_string(e.n);
  return row;
}

}  // namespace

CorrelationReport correlation_report(const blanc::ScoreMatrix& matrix, std::span<const corpus::MosTable> tables,
                                     const ReportOptions& options) {
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw std::invalid_argument("correlation_report: alpha must be in (0,1)");
  }
  CorrelationReport report;
  for (const auto& column : matrix.columns()) {
    const auto values = matrix.column_values(column);
    for (const auto& table : tables) {
      std::vector<double> x;
      std::vector<double> y;
      for (const auto& [id, v] : values) {
        if (options.restrict_ids && !options.restrict_ids->contains(id)) continue;
        auto it = table.values.find(id);
        if (it == table.values.end()) continue;
        x.push_back(v);
        y.push_back(it->second);
      }
      if (x.size() < 3) {
        report.skipped.push_back(
            {column, table.label(), "only " + std::to_string(x.size()) + " overlapping ids (need 3)"});
        continue;
      }
      try {
        const auto r = spearman(x, y, options.p_method);
        report.entries.push_back(
            {column, table.factor, table.rater_kind, r.rho, r.p_value, r.p_value < options.alpha, r.n});
      } catch (const StatisticsError& e) {
        report.skipped.push_back({column, table.label(), e.what()});
      }
    }
  }
  return report;
}

std::vector<std::pair<std::string, double>> rank_configs(std::span<const CorrelationEntry> report,
                                                         corpus::Factor factor, corpus::RaterKind rater_kind) {
  std::vector<std::pair<std::string, double>> ranked;
  for (const auto& e : report) {
    if (e.factor == factor && e.rater_kind == rater_kind) ranked.emplace_back(e.metric_name, e.rho);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

std::vector<SubgroupReport> subgroup_reports(const blanc::ScoreMatrix& matrix,
                                             std::span<const corpus::MosTable> tables,
                                             std::span<const corpus::CorpusRecord> records,
                                             const ReportOptions& options) {
  std::vector<SubgroupReport> out;
  for (auto criterion : kAllCriteria) {
    SubgroupReport sr;
    sr.split = split_by_mean(records, criterion);
    const std::set<std::string> low(sr.split.low_ids.begin(), sr.split.low_ids.end());
    const std::set<std::string> high(sr.split.high_ids.begin(), sr.split.high_ids.end());
    ReportOptions o = options;
    o.restrict_ids = &low;
    sr.low = correlation_report(matrix, tables, o);
    o.restrict_ids = &high;
    sr.high = correlation_report(matrix, tables, o);
    out.push_back(std::move(sr));
  }
  return out;
}

void write_report_csv(std::ostream& out, std::span<const CorrelationEntry> entries) {
  out << "metric,factor,rater_kind,rho,p,significant,n\n";
  for (const auto& e : entries) out << entry_row(e) << '\n';
}

void write_plot_csv(std::ostream& out, std::span<const CorrelationEntry> entries, corpus::Factor factor,
                    corpus::RaterKind rater_kind) {
  out << "metric,rho,p,significant,marker\n";
  for (const auto& e : entries) {
    if (e.factor != factor || e.rater_kind != rater_kind) continue;
    out << csv_field(e.metric_name) << ',' << format_double(e.rho) << ',' << format_double(e.p_value) << ','
        << (e.significant ? "true" : "false") << ',' << (e.significant ? "" : "*") << '\n';
  }
}

void write_subgroup_csv(std::ostream& out, std::span<const SubgroupReport> reports) {
  out << "criterion,group,threshold,size,metric,factor,rater_kind,rho,p,significant,n\n";
  for (const auto& sr : reports) {
    const std::pair<const char*, const CorrelationReport*> sides[] = {{"low", &sr.low}, {"high", &sr.high}};
    for (const auto& [name, rep] : sides) {
      const auto size = std::string(name) == "low" ? sr.split.low_ids.size() : sr.split.high_ids.size();
      for (const auto& e : rep->entries) {
        out << to_string(sr.split.criterion) << ',' << name << ',' << format_double(sr.split.threshold) << ','
            << size << ',' << entry_row(e) << '\n';
      }
    }
  }
}

}  // namespace clozeval::stats
