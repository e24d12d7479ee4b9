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

#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "clozeval/blanc/blanc.hpp"
#include "clozeval/blanc/config.hpp"
#include "clozeval/corpus/corpus.hpp"

namespace clozeval::blanc {

// Bumped whenever a change alters computed scores; stale entries then miss.
inline constexpr std::string_view kBlancAlgorithmVersion = "blanc-help/1";

struct CacheEntry {
  double value = 0.0;
  std::string metric;
  std::string record_id;
  std::optional<BlancScore> counts;  // BLANC cells only

  bool operator==(const CacheEntry&) const = default;
};

// SHA-256 (hex) over the model, gap, length thresholds, record id, a digest
// of the record text and the algorithm version.
std::string blanc_cache_key(const BlancConfig& config, const corpus::CorpusRecord& record,
                            std::string_view algorithm_version = kBlancAlgorithmVersion);

// Key for any other per-record metric (e.g. "ROUGE-1"); `variant` carries
// extra parameters such as the embedding model.
std::string metric_cache_key(std::string_view metric, std::string_view variant,
                             const corpus::CorpusRecord& record, std::string_view algorithm_version);

// Content-addressed score store persisted as a single JSON document.
//
// Safe for concurrent get/put from worker threads. save() writes a temporary
// file and renames it over the target, so an interrupted run never leaves a
// half-written cache behind.
class ScoreCache {
 public:
  ScoreCache() = default;  // in-memory only
  explicit ScoreCache(std::filesystem::path path);

  std::optional<CacheEntry> get(const std::string& key) const;
  void put(const std::string& key, CacheEntry entry);
  void save() const;

  std::size_t size() const;
  std::size_t hits() const noexcept { return hits_.load(); }
  std::size_t misses() const noexcept { return misses_.load(); }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<std::string, CacheEntry> entries_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

}  // namespace clozeval::blanc
