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
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clozeval/corpus/corpus.hpp"

namespace clozeval::cli {

enum class BackendKind { kMock, kRemote };

struct RunConfig {
  std::filesystem::path corpus_path;
  std::filesystem::path annotations_path;
  std::filesystem::path output_dir = ".";
  // Score matrix read by `correlate`; defaults to <output_dir>/scores.csv.
  std::filesystem::path scores_path;
  std::filesystem::path cache_path;  // empty: no persistent cache
  std::filesystem::path mock_vocab_path;
  BackendKind backend = BackendKind::kMock;
  std::string url;
  std::vector<std::string> models;
  std::vector<std::string> metrics;
  std::vector<corpus::Factor> factors;
  std::set<std::string> case_insensitive_models;
  bool sweep = false;  // `report` also runs the sweep
  double significance_level = 0.05;
  std::size_t workers = 1;
  std::size_t top_k = 5;

  std::filesystem::path effective_scores_path() const;
};

// Defaults: the three German models, all metrics plus BLANC, the extrinsic
// factors, one worker per CPU.
RunConfig default_run_config();

// Applies one `key = value` setting. Keys: corpus, annotations, out, scores,
// cache, mock_vocab, backend, url, models, metrics, factors,
// case_insensitive, sweep, alpha, workers, top_k. Lists are comma-separated.
// Throws InputError for unknown keys or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

// Flat key/value file: one `key = value` per line, '#' starts a comment,
// values may be double-quoted.
void apply_config_file(RunConfig& config, std::istream& in, const std::string& source_name = "<config>");
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

// Throws InputError when the configuration is unusable (alpha outside (0,1),
// remote backend without url, unknown metric, ...).
void validate(const RunConfig& config);

std::vector<std::string> split_list(std::string_view value);

}  // namespace clozeval::cli
