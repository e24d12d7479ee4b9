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

#include "clozeval/blanc/sweep.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include "clozeval/blanc/blanc.hpp"
#include "clozeval/parallel.hpp"

namespace clozeval::blanc {

namespace {

struct PendingCell {
  std::size_t row;
  std::size_t column;
  std::string key;
  std::size_t document;  // index into the tokenized-document table
};

struct DocumentSlot {
  std::string model_id;
  std::size_t row;
  std::optional<TokenizedDocument> document;
  std::string error;
};

}  // namespace

SweepResult run_sweep(std::span<const corpus::CorpusRecord> corpus,
                      std::span<const BlancConfig> configs, const BackendResolver& resolver,
                      ScoreCache* cache, const SweepOptions& options) {
  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  for (const auto& r : corpus) ids.push_back(r.id);
  std::vector<std::string> columns;
  for (const auto& c : configs) {
    validate(c);
    columns.push_back(config_name(c));
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      if (columns[i] == columns[j]) throw std::invalid_argument("duplicate configuration " + columns[i]);
    }
  }

  SweepResult result{ScoreMatrix(ids, columns), 0, 0, 0};

  // Cache lookups; collect the cells that need the backend.
  std::vector<PendingCell> pending;
  std::vector<DocumentSlot> documents;
  std::map<std::pair<std::string, std::size_t>, std::size_t> document_index;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    for (std::size_t r = 0; r < corpus.size(); ++r) {
      std::string key = blanc_cache_key(configs[c], corpus[r]);
      if (cache) {
        if (auto hit = cache->get(key)) {
          result.matrix.set(r, c, hit->value);
          ++result.cache_hits;
          continue;
        }
      }
      auto [it, inserted] = document_index.try_emplace({configs[c].model_id, r}, documents.size());
      if (inserted) documents.push_back(DocumentSlot{configs[c].model_id, r, std::nullopt, {}});
      pending.push_back(PendingCell{r, c, std::move(key), it->second});
    }
  }

  parallel_for(documents.size(), options.workers, [&](std::size_t i) {
    auto& slot = documents[i];
    try {
      slot.document = tokenize_document(corpus[slot.row], slot.model_id, resolver(slot.model_id));
    } catch (const std::exception& e) {
      slot.error = std::string("tokenization failed: ") + e.what();
    }
  });

  std::vector<std::optional<BlancScore>> scores(pending.size());
  std::vector<std::string> errors(pending.size());
  parallel_for(pending.size(), options.workers, [&](std::size_t i) {
    const auto& cell = pending[i];
    const auto& slot = documents[cell.document];
    if (!slot.document) {
      errors[i] = slot.error;
      return;
    }
    const auto& config = configs[cell.column];
    BlancOptions opts;
    opts.case_insensitive = options.case_insensitive_models.contains(config.model_id);
    try {
      scores[i] = blanc_help(*slot.document, config, resolver(config.model_id), opts);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& cell = pending[i];
    if (scores[i]) {
      result.matrix.set(cell.row, cell.column, scores[i]->score);
      ++result.computed;
      if (cache) {
        cache->put(cell.key, CacheEntry{scores[i]->score, columns[cell.column], ids[cell.row], scores[i]});
      }
    } else {
      result.matrix.set_missing(cell.row, cell.column, errors[i]);
      ++result.failures;
    }
  }
  return result;
}

}  // namespace clozeval::blanc
