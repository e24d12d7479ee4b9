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

#include "clozeval/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clozeval/blanc/config.hpp"
#include "clozeval/blanc/sweep.hpp"
#include "clozeval/corpus/mos.hpp"
#include "clozeval/error.hpp"
#include "clozeval/lexical/bertscore.hpp"
#include "clozeval/lexical/bleu.hpp"
#include "clozeval/lexical/js_similarity.hpp"
#include "clozeval/lexical/rouge.hpp"
#include "clozeval/lm/mock_backend.hpp"
#include "clozeval/lm/remote_backend.hpp"
#include "clozeval/parallel.hpp"
#include "clozeval/stats/correlation_report.hpp"
#include "clozeval/text/unicode.hpp"

namespace clozeval::cli {

namespace fs = std::filesystem;

namespace {

bool is_baseline(std::string_view name) {
  return std::find(kBaselineMetrics.begin(), kBaselineMetrics.end(), name) != kBaselineMetrics.end();
}

// Column layout in metric order, "BLANC" expanded per model, duplicates dropped.
struct Plan {
  std::vector<std::string> columns;
  std::vector<std::string> baseline;
  std::vector<blanc::BlancConfig> configs;
};

Plan plan_columns(const RunConfig& config) {
  Plan plan;
  auto add_config = [&](blanc::BlancConfig c) {
    auto name = blanc::config_name(c);
    if (std::find(plan.columns.begin(), plan.columns.end(), name) != plan.columns.end()) return;
    plan.columns.push_back(name);
    plan.configs.push_back(std::move(c));
  };
  for (const auto& m : config.metrics) {
    if (is_baseline(m)) {
      if (std::find(plan.baseline.begin(), plan.baseline.end(), m) != plan.baseline.end()) continue;
      plan.columns.push_back(m);
      plan.baseline.push_back(m);
    } else if (m == kBlancMetric) {
      for (const auto& model : config.models) {
        auto c = blanc::recommended_config();
        c.model_id = model;
        add_config(std::move(c));
      }
    } else if (auto c = blanc::parse_config_name(m)) {
      add_config(std::move(*c));
    }
  }
  return plan;
}

std::string metric_variant(std::string_view metric) {
  return metric == "BERTScore-F" ? std::string(lexical::kBertScoreModel) : std::string();
}

double baseline_value(std::string_view metric, const corpus::CorpusRecord& r, const lm::Backend& backend) {
  if (metric == "JS") return lexical::js_similarity(r.summary, r.source);
  if (r.references.empty()) throw InputError("no reference summaries");
  if (metric == "ROUGE-1") return lexical::rouge_n_max(r.summary, r.references, 1).f1;
  if (metric == "ROUGE-2") return lexical::rouge_n_max(r.summary, r.references, 2).f1;
  if (metric == "ROUGE-L") return lexical::rouge_l_max(r.summary, r.references).f1;
  if (metric == "BLEU") return lexical::bleu(r.summary, r.references);
  return lexical::bertscore_f_max(r.summary, r.references, backend);
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string(), path.string());
  body(out);
  if (!out) throw InputError("write failed for " + path.string(), path.string());
}

std::optional<blanc::ScoreCache> open_cache(const RunConfig& config) {
  if (config.cache_path.empty()) return std::nullopt;
  return std::optional<blanc::ScoreCache>(std::in_place, config.cache_path);
}

std::vector<corpus::MosTable> mos_tables(const RunConfig& config) {
  if (config.annotations_path.empty()) throw InputError("--annotations is required", {}, 0, "annotations");
  const auto annotations = corpus::load_annotations(config.annotations_path);
  std::vector<corpus::MosTable> tables;
  for (auto factor : config.factors) {
    for (auto kind : corpus::kRaterKinds) tables.push_back(corpus::aggregate_mos(annotations, factor, kind));
  }
  return tables;
}

std::string plot_file_name(const corpus::MosTable& t) {
  return "plot_" + std::string(corpus::to_string(t.factor)) + "_" + std::string(corpus::to_string(t.rater_kind)) +
         ".csv";
}

// Ranked metrics of one table, flagged like the figures: "*" marks a
// non-significant correlation.
void log_ranking(std::ostream& log, std::span<const stats::CorrelationEntry> entries,
                 const corpus::MosTable& table, std::size_t limit) {
  std::map<std::string, const stats::CorrelationEntry*> by_name;
  for (const auto& e : entries) {
    if (e.factor == table.factor && e.rater_kind == table.rater_kind) by_name[e.metric_name] = &e;
  }
  const auto ranked = stats::rank_configs(entries, table.factor, table.rater_kind);
  log << table.label() << ":";
  if (ranked.empty()) log << " (no correlations)";
  log << '\n';
  for (std::size_t i = 0; i < ranked.size() && i < limit; ++i) {
    const auto* e = by_name.at(ranked[i].first);
    log << "  " << (i + 1) << ". " << e->metric_name << " rho=" << blanc::format_double(e->rho)
        << " p=" << blanc::format_double(e->p_value) << (e->significant ? "" : " *") << '\n';
  }
}

std::unique_ptr<lm::Backend> make_backend_or_null(const RunConfig& config, const lm::Backend* injected) {
  if (injected) return nullptr;
  return make_backend(config);
}

}  // namespace

bool is_known_metric(std::string_view name) {
  return is_baseline(name) || name == kBlancMetric || blanc::parse_config_name(name).has_value();
}

ScoreRun compute_scores(std::span<const corpus::CorpusRecord> corpus, const RunConfig& config,
                        const lm::Backend& backend, blanc::ScoreCache* cache) {
  const Plan plan = plan_columns(config);
  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  for (const auto& r : corpus) ids.push_back(r.id);

  ScoreRun run;
  run.matrix = blanc::ScoreMatrix(ids, plan.columns);

  const std::size_t nb = plan.baseline.size();
  std::vector<blanc::ScoreMatrix::Cell> cells(corpus.size() * nb);
  std::vector<char> hit(cells.size(), 0);
  parallel_for(cells.size(), config.workers, [&](std::size_t i) {
    const auto& record = corpus[i / nb];
    const auto& metric = plan.baseline[i % nb];
    const auto key = cache ? blanc::metric_cache_key(metric, metric_variant(metric), record, kBaselineAlgorithmVersion)
                           : std::string();
    if (cache) {
      if (auto entry = cache->get(key)) {
        cells[i].value = entry->value;
        hit[i] = 1;
        return;
      }
    }
    try {
      const double v = baseline_value(metric, record, backend);
      cells[i].value = v;
      if (cache) cache->put(key, blanc::CacheEntry{v, metric, record.id, std::nullopt});
    } catch (const std::exception& e) {
      cells[i].reason = e.what();
    }
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto col = *run.matrix.column_index(plan.baseline[i % nb]);
    if (cells[i].value) {
      run.matrix.set(i / nb, col, *cells[i].value);
      ++(hit[i] ? run.cache_hits : run.computed);
    } else {
      run.matrix.set_missing(i / nb, col, cells[i].reason);
      ++run.failures;
    }
  }

  if (!plan.configs.empty()) {
    blanc::SweepOptions options;
    options.workers = config.workers;
    options.case_insensitive_models = config.case_insensitive_models;
    auto resolver = [&backend](const std::string&) -> const lm::Backend& { return backend; };
    auto sweep = blanc::run_sweep(corpus, plan.configs, resolver, cache, options);
    for (std::size_t c = 0; c < sweep.matrix.columns().size(); ++c) {
      const auto col = *run.matrix.column_index(sweep.matrix.columns()[c]);
      for (std::size_t r = 0; r < ids.size(); ++r) {
        const auto& cell = sweep.matrix.cell(r, c);
        if (cell.value) {
          run.matrix.set(r, col, *cell.value);
        } else {
          run.matrix.set_missing(r, col, cell.reason);
        }
      }
    }
    run.computed += sweep.computed;
    run.cache_hits += sweep.cache_hits;
    run.failures += sweep.failures;
  }
  return run;
}

std::unique_ptr<lm::Backend> make_backend(const RunConfig& config) {
  if (config.backend == BackendKind::kRemote) {
    lm::RemoteOptions options;
    options.base_url = config.url;
    return std::make_unique<lm::RemoteBackend>(std::move(options));
  }
  lm::MockScript script;
  if (!config.mock_vocab_path.empty()) {
    std::ifstream in(config.mock_vocab_path);
    if (!in) throw InputError("cannot open vocabulary " + config.mock_vocab_path.string(), config.mock_vocab_path.string());
    std::string line;
    while (std::getline(in, line)) {
      auto token = text::trim(line);
      if (!token.empty()) script.vocabulary.emplace_back(token);
    }
  }
  return std::make_unique<lm::MockBackend>(std::move(script));
}

int cmd_score(const RunConfig& config, const lm::Backend& backend, std::ostream& log) {
  validate(config);
  if (config.corpus_path.empty()) throw InputError("--corpus is required", {}, 0, "corpus");
  const auto records = corpus::load_corpus(config.corpus_path);
  auto cache = open_cache(config);
  const auto run = compute_scores(records, config, backend, cache ? &*cache : nullptr);
  if (cache) cache->save();

  write_file(config.output_dir / "scores.csv", [&](std::ostream& o) { run.matrix.write_csv(o); });
  write_file(config.output_dir / "failures.csv", [&](std::ostream& o) { run.matrix.write_failures_csv(o); });
  log << "scored " << records.size() << " records x " << run.matrix.columns().size() << " columns: computed "
      << run.computed << ", cached " << run.cache_hits << ", failed " << run.failures << '\n';
  return run.failures ? kExitPartial : kExitOk;
}

int cmd_correlate(const RunConfig& config, std::ostream& log) {
  validate(config);
  const auto scores_path = config.effective_scores_path();
  std::ifstream in(scores_path);
  if (!in) throw InputError("cannot open score matrix " + scores_path.string(), scores_path.string());
  const auto matrix = blanc::ScoreMatrix::read_csv(in);
  const auto tables = mos_tables(config);

  stats::ReportOptions options;
  options.alpha = config.significance_level;
  const auto report = stats::correlation_report(matrix, tables, options);
  for (const auto& s : report.skipped) {
    log << "skipped " << s.metric_name << " vs " << s.table_label << ": " << s.reason << '\n';
  }

  write_file(config.output_dir / "correlations.csv", [&](std::ostream& o) { stats::write_report_csv(o, report.entries); });
  write_file(config.output_dir / "skipped.csv", [&](std::ostream& o) {
    o << "metric,table,reason\n";
    for (const auto& s : report.skipped) {
      o << blanc::csv_field(s.metric_name) << ',' << blanc::csv_field(s.table_label) << ','
        << blanc::csv_field(s.reason) << '\n';
    }
  });
  for (const auto& t : tables) {
    write_file(config.output_dir / plot_file_name(t),
               [&](std::ostream& o) { stats::write_plot_csv(o, report.entries, t.factor, t.rater_kind); });
    log_ranking(log, report.entries, t, config.top_k);
  }

  if (!config.corpus_path.empty()) {
    auto records = corpus::load_corpus(config.corpus_path);
    std::erase_if(records, [&](const auto& r) { return !matrix.row_index(r.id); });
    if (records.size() >= 2) {
      const auto groups = stats::subgroup_reports(matrix, tables, records, options);
      write_file(config.output_dir / "subgroups.csv", [&](std::ostream& o) { stats::write_subgroup_csv(o, groups); });
      for (const auto& g : groups) {
        log << "split " << stats::to_string(g.split.criterion) << " at " << blanc::format_double(g.split.threshold)
            << ": low " << g.split.low_ids.size() << ", high " << g.split.high_ids.size() << '\n';
      }
    } else {
      log << "subgroup analysis skipped: fewer than 2 scored records\n";
    }
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, const lm::Backend& backend, std::ostream& log) {
  validate(config);
  if (config.corpus_path.empty()) throw InputError("--corpus is required", {}, 0, "corpus");
  const auto records = corpus::load_corpus(config.corpus_path);
  const auto configs = blanc::sweep_grid(config.models);
  auto cache = open_cache(config);

  blanc::SweepOptions options;
  options.workers = config.workers;
  options.case_insensitive_models = config.case_insensitive_models;
  auto resolver = [&backend](const std::string&) -> const lm::Backend& { return backend; };
  const auto result = blanc::run_sweep(records, configs, resolver, cache ? &*cache : nullptr, options);
  if (cache) cache->save();

  write_file(config.output_dir / "sweep_scores.csv", [&](std::ostream& o) { result.matrix.write_csv(o); });
  write_file(config.output_dir / "sweep_failures.csv", [&](std::ostream& o) { result.matrix.write_failures_csv(o); });
  log << "sweep: " << configs.size() << " configurations x " << records.size() << " records: computed "
      << result.computed << ", cached " << result.cache_hits << ", failed " << result.failures << '\n';

  if (!config.annotations_path.empty()) {
    const auto tables = mos_tables(config);
    stats::ReportOptions ro;
    ro.alpha = config.significance_level;
    const auto report = stats::correlation_report(result.matrix, tables, ro);
    write_file(config.output_dir / "sweep_correlations.csv",
               [&](std::ostream& o) { stats::write_report_csv(o, report.entries); });
    std::map<std::pair<std::string, std::string>, const stats::CorrelationEntry*> lookup;
    for (const auto& e : report.entries) {
      lookup[{e.metric_name, std::string(corpus::to_string(e.factor)) + "/" + std::string(corpus::to_string(e.rater_kind))}] = &e;
    }
    write_file(config.output_dir / "sweep_top.csv", [&](std::ostream& o) {
      o << "factor,rater_kind,rank,config,rho,p,significant\n";
      for (const auto& t : tables) {
        const auto ranked = stats::rank_configs(report.entries, t.factor, t.rater_kind);
        for (std::size_t i = 0; i < ranked.size() && i < config.top_k; ++i) {
          const auto* e = lookup.at({ranked[i].first, t.label()});
          o << corpus::to_string(t.factor) << ',' << corpus::to_string(t.rater_kind) << ',' << (i + 1) << ','
            << blanc::csv_field(e->metric_name) << ',' << blanc::format_double(e->rho) << ','
            << blanc::format_double(e->p_value) << ',' << (e->significant ? "true" : "false") << '\n';
        }
      }
    });
    for (const auto& t : tables) log_ranking(log, report.entries, t, config.top_k);
  }
  return result.failures ? kExitPartial : kExitOk;
}

int cmd_report(const RunConfig& config, const lm::Backend& backend, std::ostream& log) {
  int code = cmd_score(config, backend, log);
  if (!config.annotations_path.empty()) {
    RunConfig correlate = config;
    correlate.scores_path = config.output_dir / "scores.csv";
    code = std::max(code, cmd_correlate(correlate, log));
  }
  if (config.sweep) code = std::max(code, cmd_sweep(config, backend, log));
  log << "report written to " << config.output_dir.string() << " (exit " << code << ")\n";
  return code;
}

std::string error_json(const std::exception& e) {
  nlohmann::json j;
  j["message"] = e.what();
  if (const auto* ie = dynamic_cast<const InputError*>(&e)) {
    j["type"] = "input";
    if (!ie->path().empty()) j["path"] = ie->path();
    if (ie->line() != 0) j["line"] = ie->line();
    if (!ie->field().empty()) j["field"] = ie->field();
  } else if (const auto* be = dynamic_cast<const BackendError*>(&e)) {
    j["type"] = "backend";
    j["kind"] = to_string(be->kind());
  } else if (dynamic_cast<const Error*>(&e)) {
    j["type"] = "evaluation";
  } else if (dynamic_cast<const fs::filesystem_error*>(&e)) {
    j["type"] = "filesystem";
  } else {
    j["type"] = "internal";
  }
  return nlohmann::json{{"error", j}}.dump();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const lm::Backend* backend) {
  CLI::App app{"clozeval: reference-free and reference-based summary evaluation"};
  app.require_subcommand(1);
  app.fallthrough();

  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  static constexpr Flag kFlags[] = {
      {"--corpus", "corpus", "Corpus JSONL"},
      {"--annotations", "annotations", "Annotation JSONL"},
      {"--backend", "backend", "mock or remote"},
      {"--url", "url", "Inference service base URL (default: $EVAL_BACKEND_URL)"},
      {"--models", "models", "Comma-separated model ids"},
      {"--metrics", "metrics", "Comma-separated metrics: ROUGE-1,ROUGE-2,ROUGE-L,BLEU,JS,BERTScore-F,BLANC or config names"},
      {"--factors", "factors", "Comma-separated factors to correlate"},
      {"--cache", "cache", "Score cache JSON"},
      {"--out", "out", "Output directory"},
      {"--scores", "scores", "Score matrix CSV for correlate"},
      {"--alpha", "alpha", "Significance level"},
      {"--workers", "workers", "Worker threads"},
      {"--top-k", "top_k", "Rows per factor in rankings"},
      {"--mock-vocab", "mock_vocab", "Subword vocabulary for the mock backend"},
      {"--case-insensitive", "case_insensitive", "Models compared case-insensitively"},
  };
  std::vector<std::string> values(std::size(kFlags));
  std::vector<CLI::Option*> options;
  for (std::size_t i = 0; i < std::size(kFlags); ++i) {
    options.push_back(app.add_option(kFlags[i].name, values[i], kFlags[i].help));
  }
  std::string config_file;
  app.add_option("--config", config_file, "Flat key = value config file; flags take precedence");
  bool sweep = false;
  auto* sweep_flag = app.add_flag("--sweep", sweep, "report: also run the configuration sweep");

  auto* score = app.add_subcommand("score", "Score the corpus and write scores.csv");
  auto* correlate = app.add_subcommand("correlate", "Correlate scores with opinion scores");
  auto* sweep_cmd = app.add_subcommand("sweep", "Score and rank the 24-point grid per model");
  auto* report = app.add_subcommand("report", "score + correlate (+ sweep with --sweep)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFatal;
  }

  try {
    RunConfig config = default_run_config();
    if (!config_file.empty()) apply_config_file(config, fs::path(config_file));
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i]->count() > 0) apply_setting(config, kFlags[i].key, values[i]);
    }
    if (sweep_flag->count() > 0) config.sweep = sweep;
    if (config.url.empty()) {
      if (const char* env = std::getenv("EVAL_BACKEND_URL")) config.url = env;
    }
    validate(config);

    if (correlate->parsed()) return cmd_correlate(config, out);
    const auto owned = make_backend_or_null(config, backend);
    const lm::Backend& be = backend ? *backend : *owned;
    if (score->parsed()) return cmd_score(config, be, out);
    if (sweep_cmd->parsed()) return cmd_sweep(config, be, out);
    if (report->parsed()) return cmd_report(config, be, out);
    return kExitFatal;
  } catch (const std::exception& e) {
    err << error_json(e) << '\n';
    return kExitFatal;
  }
}

}  // namespace clozeval::cli
