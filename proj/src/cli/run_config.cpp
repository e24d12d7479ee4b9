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

#include "clozeval/cli/run_config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "clozeval/cli/cli.hpp"
#include "clozeval/error.hpp"
#include "clozeval/lm/backend.hpp"
#include "clozeval/parallel.hpp"
#include "clozeval/text/unicode.hpp"

namespace clozeval::cli {

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("invalid value for " + std::string(key) + ": '" + std::string(value) + "'", {}, 0,
                     std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw InputError("invalid boolean for " + std::string(key) + ": '" + std::string(value) + "'", {}, 0,
                   std::string(key));
}

}  // namespace

std::filesystem::path RunConfig::effective_scores_path() const {
  return scores_path.empty() ? output_dir / "scores.csv" : scores_path;
}

RunConfig default_run_config() {
  RunConfig c;
  for (auto m : lm::kGermanModels) c.models.emplace_back(m);
  for (auto m : kBaselineMetrics) c.metrics.emplace_back(m);
  c.metrics.emplace_back(kBlancMetric);
  c.factors.assign(corpus::kExtrinsicFactors.begin(), corpus::kExtrinsicFactors.end());
  c.workers = default_worker_count();
  return c;
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    auto comma = value.find(',', start);
    if (comma == std::string_view::npos) comma = value.size();
    auto item = text::trim(value.substr(start, comma - start));
    if (!item.empty()) out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  const std::string k(key);
  if (k == "corpus") {
    c.corpus_path = std::string(value);
  } else if (k == "annotations") {
    c.annotations_path = std::string(value);
  } else if (k == "out") {
    c.output_dir = std::string(value);
  } else if (k == "scores") {
    c.scores_path = std::string(value);
  } else if (k == "cache") {
    c.cache_path = std::string(value);
  } else if (k == "mock_vocab" || k == "mock-vocab") {
    c.mock_vocab_path = std::string(value);
  } else if (k == "backend") {
    if (value == "mock") {
      c.backend = BackendKind::kMock;
    } else if (value == "remote") {
      c.backend = BackendKind::kRemote;
    } else {
      throw InputError("backend must be 'mock' or 'remote', got '" + std::string(value) + "'", {}, 0, k);
    }
  } else if (k == "url") {
    c.url = std::string(value);
  } else if (k == "models") {
    c.models = split_list(value);
  } else if (k == "metrics") {
    c.metrics = split_list(value);
  } else if (k == "factors") {
    c.factors.clear();
    for (const auto& name : split_list(value)) {
      auto f = corpus::parse_factor(name);
      if (!f) throw InputError("unknown factor '" + name + "'", {}, 0, k);
      c.factors.push_back(*f);
    }
  } else if (k == "case_insensitive" || k == "case-insensitive") {
    auto list = split_list(value);
    c.case_insensitive_models = {list.begin(), list.end()};
  } else if (k == "sweep") {
    c.sweep = parse_bool(key, value);
  } else if (k == "alpha") {
    c.significance_level = parse_number<double>(key, value);
  } else if (k == "workers") {
    c.workers = parse_number<std::size_t>(key, value);
  } else if (k == "top_k" || k == "top-k") {
    c.top_k = parse_number<std::size_t>(key, value);
  } else {
    throw InputError("unknown setting '" + k + "'", {}, 0, k);
  }
}

void apply_config_file(RunConfig& config, std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = text::trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw InputError(source_name + ":" + std::to_string(line_no) + ": expected key = value", source_name, line_no);
    auto key = text::trim(view.substr(0, eq));
    auto value = text::trim(view.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    try {
      apply_setting(config, key, value);
    } catch (const InputError& e) {
      throw InputError(source_name + ":" + std::to_string(line_no) + ": " + e.what(), source_name, line_no,
                       e.field());
    }
  }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path.string(), path.string());
  apply_config_file(config, in, path.string());
}

void validate(const RunConfig& c) {
  if (!(c.significance_level > 0.0 && c.significance_level < 1.0)) {
    throw InputError("alpha must be in (0, 1)", {}, 0, "alpha");
  }
  if (c.backend == BackendKind::kRemote && c.url.empty()) {
    throw InputError("remote backend requires --url or EVAL_BACKEND_URL", {}, 0, "url");
  }
  if (c.workers == 0) throw InputError("workers must be >= 1", {}, 0, "workers");
  if (c.top_k == 0) throw InputError("top_k must be >= 1", {}, 0, "top_k");
  if (c.models.empty()) throw InputError("at least one model is required", {}, 0, "models");
  for (const auto& m : c.metrics) {
    if (!is_known_metric(m)) throw InputError("unknown metric '" + m + "'", {}, 0, "metrics");
  }
}

}  // namespace clozeval::cli
