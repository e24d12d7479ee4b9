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

#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clozeval/lm/backend.hpp"

namespace clozeval::lm {

struct RemoteOptions {
  std::string base_url;  // e.g. "http://127.0.0.1:8080"
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{200};
  double backoff_multiplier = 2.0;
  std::chrono::milliseconds max_backoff{5000};
  std::chrono::seconds connect_timeout{5};
  std::chrono::seconds read_timeout{120};
  std::size_t max_inputs_per_request = 64;
  // Injectable for tests; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// HTTP client for the inference service wire protocol (see wire.hpp).
//
// Transport failures and 5xx/429 responses are retried with exponential
// backoff; after max_attempts a RetriesExhaustedError is raised. 400, 404
// and 413 map to validation, unknown-model and over-length errors without
// retrying. Each call uses its own connection, so concurrent calls never
// share request/response state.
class RemoteBackend final : public Backend {
 public:
  explicit RemoteBackend(RemoteOptions options);

  std::vector<BackendDescriptor> models() const override;
  MaskPrediction predict_masked(const MaskQuery& query) const override;
  std::vector<BatchItem> batch(std::span<const MaskQuery> queries) const override;
  std::vector<std::string> tokenize(std::string_view text, std::string_view model_id) const override;
  EmbeddingMatrix embed_tokens(std::string_view text, std::string_view model_id) const override;

  // Drops the cached /v1/models response.
  void refresh_models() const;

  const RemoteOptions& options() const noexcept { return options_; }

 private:
  nlohmann::json get(std::string_view path) const;
  nlohmann::json post(std::string_view path, const nlohmann::json& body) const;
  std::vector<MaskPrediction> fill_mask(std::span<const MaskQuery> queries) const;

  RemoteOptions options_;
  mutable std::mutex models_mutex_;
  mutable std::optional<std::vector<BackendDescriptor>> models_;
};

}  // namespace clozeval::lm
