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
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clozeval/blanc/score_cache.hpp"
#include "clozeval/blanc/score_matrix.hpp"
#include "clozeval/cli/run_config.hpp"
#include "clozeval/corpus/corpus.hpp"
#include "clozeval/lm/backend.hpp"

namespace clozeval::cli {

inline constexpr std::array<std::string_view, 6> kBaselineMetrics = {"ROUGE-1", "ROUGE-2", "ROUGE-L",
                                                                     "BLEU",    "JS",      "BERTScore-F"};
// Expands to the recommended BLANC configuration of every configured model.
inline constexpr std::string_view kBlancMetric = "BLANC";
// Version tag of the baseline metric cache entries.
inline constexpr std::string_view kBaselineAlgorithmVersion = "baseline/1";

enum ExitCode : int { kExitOk = 0, kExitPartial = 1, kExitFatal = 2 };

bool is_known_metric(std::string_view name);

struct ScoreRun {
  blanc::ScoreMatrix matrix;
  std::size_t computed = 0;
  std::size_t cache_hits = 0;
  std::size_t failures = 0;
};

// Scores every record under `metrics` (baseline names, "BLANC" or BLANC
// config names). Missing cells carry the failure reason.
ScoreRun compute_scores(std::span<const corpus::CorpusRecord> corpus, const RunConfig& config,
                        const lm::Backend& backend, blanc::ScoreCache* cache);

std::unique_ptr<lm::Backend> make_backend(const RunConfig& config);

// Commands write their files below config.output_dir and log progress to
// `log`. They return an ExitCode and throw on fatal errors.
int cmd_score(const RunConfig& config, const lm::Backend& backend, std::ostream& log);
int cmd_correlate(const RunConfig& config, std::ostream& log);
int cmd_sweep(const RunConfig& config, const lm::Backend& backend, std::ostream& log);
int cmd_report(const RunConfig& config, const lm::Backend& backend, std::ostream& log);

// Machine-readable description of a fatal error, one JSON object.
std::string error_json(const std::exception& e);

// Full command-line entry point. A non-null `backend` replaces the one
// the flags would create.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const lm::Backend* backend = nullptr);

}  // namespace clozeval::cli
