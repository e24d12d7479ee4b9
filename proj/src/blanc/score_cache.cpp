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

#include "clozeval/blanc/score_cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clozeval/error.hpp"

namespace clozeval::blanc {

using nlohmann::json;

namespace {

constexpr int kCacheFormat = 1;

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

// Unit separator keeps field boundaries unambiguous.
void field(std::string& buf, std::string_view value) {
  buf += value;
  buf += '\x1f';
}

std::string record_digest(const corpus::CorpusRecord& r) {
  std::string buf;
  field(buf, r.query);
  field(buf, r.source);
  field(buf, r.summary);
  for (const auto& ref : r.references) field(buf, ref);
  return sha256_hex(buf);
}

}  // namespace

std::string blanc_cache_key(const BlancConfig& c, const corpus::CorpusRecord& record,
                            std::string_view algorithm_version) {
  std::string buf;
  field(buf, "blanc");
  field(buf, c.model_id);
  field(buf, std::to_string(c.gap));
  field(buf, std::to_string(c.l_normal));
  field(buf, std::to_string(c.l_lead));
  field(buf, std::to_string(c.l_follow));
  field(buf, record.id);
  field(buf, record_digest(record));
  field(buf, algorithm_version);
  return sha256_hex(buf);
}

std::string metric_cache_key(std::string_view metric, std::string_view variant,
                             const corpus::CorpusRecord& record, std::string_view algorithm_version) {
  std::string buf;
  field(buf, "metric");
  field(buf, metric);
  field(buf, variant);
  field(buf, record.id);
  field(buf, record_digest(record));
  field(buf, algorithm_version);
  return sha256_hex(buf);
}

ScoreCache::ScoreCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw InputError("cannot read cache '" + path_.string() + "'", path_.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("cache '" + path_.string() + "' is not valid JSON: " + e.what(), path_.string());
  }
  if (doc.value("format", 0) != kCacheFormat || !doc.contains("entries") || !doc["entries"].is_object()) {
    throw InputError("cache '" + path_.string() + "' has an unsupported layout", path_.string());
  }
  for (const auto& [key, e] : doc["entries"].items()) {
    CacheEntry entry;
    entry.value = e.at("value").get<double>();
    entry.metric = e.value("metric", "");
    entry.record_id = e.value("record", "");
    if (auto it = e.find("counts"); it != e.end()) {
      const auto& a = *it;
      entry.counts = BlancScore{a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>(),
                                a.at(2).get<std::size_t>(), a.at(3).get<std::size_t>(),
                                e.at("n").get<std::size_t>(), entry.value};
    }
    entries_.emplace(key, std::move(entry));
  }
}

std::optional<CacheEntry> ScoreCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void ScoreCache::put(const std::string& key, CacheEntry entry) {
  std::lock_guard lock(mutex_);
  entries_[key] = std::move(entry);
}

std::size_t ScoreCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void ScoreCache::save() const {
  if (path_.empty()) return;
  json entries = json::object();
  {
    std::lock_guard lock(mutex_);
    for (const auto& [key, e] : entries_) {
      json j = {{"value", e.value}, {"metric", e.metric}, {"record", e.record_id}};
      if (e.counts) {
        j["counts"] = {e.counts->s00, e.counts->s01, e.counts->s10, e.counts->s11};
        j["n"] = e.counts->n;
      }
      entries[key] = std::move(j);
    }
  }
  const json doc = {{"format", kCacheFormat}, {"entries", std::move(entries)}};

  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache '" + tmp.string() + "'");
    out << doc.dump(1) << '\n';
    if (!out) throw Error("failed writing cache '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace clozeval::blanc
