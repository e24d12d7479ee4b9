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

#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "clozeval/blanc/config.hpp"
#include "clozeval/blanc/score_cache.hpp"
#include "clozeval/blanc/score_matrix.hpp"
#include "clozeval/corpus/corpus.hpp"
#include "clozeval/lm/backend.hpp"

namespace clozeval::blanc {

using BackendResolver = std::function<const lm::Backend&(const std::string& model_id)>;

struct SweepOptions {
  std::size_t workers = 1;
  // Models whose predictions are compared case-insensitively.
  std::set<std::string> case_insensitive_models;
};

struct SweepResult {
  ScoreMatrix matrix;  // rows: record ids (corpus order); columns: config_name(config)
  std::size_t computed = 0;
  std::size_t cache_hits = 0;
  std::size_t failures = 0;
};

// Scores every (config, record) cell. Cached cells are reused without
// touching the backend; failed cells are recorded as missing with a reason
// and never abort the sweep. Computed cells are written to `cache` (which
// may be null); persisting it is the caller's job.
SweepResult run_sweep(std::span<const corpus::CorpusRecord> corpus,
                      std::span<const BlancConfig> configs, const BackendResolver& resolver,
                      ScoreCache* cache, const SweepOptions& options = {});

}  // namespace clozeval::blanc
