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

#include "clozeval/lm/remote_backend.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include <httplib.h>

#include "clozeval/lm/wire.hpp"

namespace clozeval::lm {

using nlohmann::json;

namespace {

std::string error_message(const httplib::Result& res) {
  try {
    auto body = json::parse(res->body);
    if (body.is_object() && body.contains("error") && body["error"].is_string()) {
      return body["error"].get<std::string>();
    }
  } catch (const json::exception&) {
  }
  return res->body;
}

bool is_transient_status(int status) { return status == 429 || status >= 500; }

}  // namespace

RemoteBackend::RemoteBackend(RemoteOptions options) : options_(std::move(options)) {
  if (options_.base_url.empty()) throw std::invalid_argument("remote backend requires a URL");
  if (options_.max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");
  if (options_.max_inputs_per_request == 0) options_.max_inputs_per_request = 1;
  if (!options_.sleep) {
    options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
}

namespace {

template <typename Call>
json with_retries(const RemoteOptions& opt, std::string_view what, Call&& call) {
  auto backoff = opt.initial_backoff;
  std::string last_error;
  for (int attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    httplib::Client client(opt.base_url);
    client.set_connection_timeout(opt.connect_timeout);
    client.set_read_timeout(opt.read_timeout);
    httplib::Result res = call(client);

    if (!res) {
      last_error = httplib::to_string(res.error());
    } else if (res->status == 200) {
      try {
        return json::parse(res->body);
      } catch (const json::parse_error& e) {
        throw BackendError(BackendErrorKind::kProtocol,
                           std::string(what) + ": response is not JSON: " + e.what());
      }
    } else if (res->status == 400) {
      throw BackendError(BackendErrorKind::kValidation, std::string(what) + ": " + error_message(res));
    } else if (res->status == 404) {
      throw BackendError(BackendErrorKind::kUnknownModel, std::string(what) + ": " + error_message(res));
    } else if (res->status == 413) {
      throw BackendError(BackendErrorKind::kOverLength, std::string(what) + ": " + error_message(res));
    } else if (is_transient_status(res->status)) {
      last_error = "HTTP " + std::to_string(res->status) + " " + error_message(res);
    } else {
      throw BackendError(BackendErrorKind::kProtocol,
                         std::string(what) + ": unexpected HTTP " + std::to_string(res->status));
    }

    if (attempt < opt.max_attempts) {
      opt.sleep(backoff);
      const auto next = std::chrono::duration_cast<std::chrono::milliseconds>(
          backoff * opt.backoff_multiplier);
      backoff = std::min(next, opt.max_backoff);
    }
  }
  throw RetriesExhaustedError(std::string(what) + ": giving up after " +
                                  std::to_string(opt.max_attempts) + " attempts: " + last_error,
                              opt.max_attempts);
}

}  // namespace

json RemoteBackend::get(std::string_view path) const {
  const std::string p(path);
  return with_retries(options_, "GET " + p, [&](httplib::Client& c) { return c.Get(p); });
}

json RemoteBackend::post(std::string_view path, const json& body) const {
  const std::string p(path);
  const std::string payload = body.dump();
  return with_retries(options_, "POST " + p, [&](httplib::Client& c) {
    return c.Post(p, payload, "application/json");
  });
}

std::vector<BackendDescriptor> RemoteBackend::models() const {
  std::lock_guard lock(models_mutex_);
  if (!models_) models_ = wire::decode_models_response(get(wire::kModelsPath));
  return *models_;
}

void RemoteBackend::refresh_models() const {
  std::lock_guard lock(models_mutex_);
  models_.reset();
}

std::vector<MaskPrediction> RemoteBackend::fill_mask(std::span<const MaskQuery> queries) const {
  auto body = post(wire::kFillMaskPath, wire::encode_fill_mask_request(queries));
  return wire::decode_fill_mask_response(body, queries);
}

MaskPrediction RemoteBackend::predict_masked(const MaskQuery& query) const {
  validate(query, describe(query.model_id));
  return fill_mask(std::span(&query, 1)).front();
}

std::vector<BatchItem> RemoteBackend::batch(std::span<const MaskQuery> queries) const {
  std::vector<BatchItem> out(queries.size());
  auto fail = [&](std::size_t i, const BackendError& e) {
    out[i] = BatchItem{std::nullopt, BatchFailure{e.kind(), e.what()}};
  };

  // Locally valid queries grouped by model, in input order.
  std::map<std::string, std::vector<std::size_t>> by_model;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    try {
      validate(queries[i], describe(queries[i].model_id));
      by_model[queries[i].model_id].push_back(i);
    } catch (const BackendError& e) {
      fail(i, e);
    }
  }

  for (const auto& [model, indices] : by_model) {
    for (std::size_t begin = 0; begin < indices.size(); begin += options_.max_inputs_per_request) {
      const std::size_t end = std::min(indices.size(), begin + options_.max_inputs_per_request);
      std::vector<MaskQuery> chunk;
      for (std::size_t k = begin; k < end; ++k) chunk.push_back(queries[indices[k]]);
      try {
        auto preds = fill_mask(chunk);
        for (std::size_t k = begin; k < end; ++k) {
          out[indices[k]] = BatchItem{std::move(preds[k - begin]), std::nullopt};
        }
      } catch (const RetriesExhaustedError& e) {
        for (std::size_t k = begin; k < end; ++k) fail(indices[k], e);
      } catch (const BackendError&) {
        // The server rejected the chunk as a whole; localize the failure.
        for (std::size_t k = begin; k < end; ++k) {
          try {
            out[indices[k]] = BatchItem{fill_mask(std::span(&queries[indices[k]], 1)).front(), std::nullopt};
          } catch (const BackendError& e) {
            fail(indices[k], e);
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::string> RemoteBackend::tokenize(std::string_view text, std::string_view model_id) const {
  if (text.empty()) throw BackendError(BackendErrorKind::kValidation, "tokenize: empty text");
  return wire::decode_tokens_response(post(wire::kTokenizePath, wire::encode_text_request(model_id, text)));
}

EmbeddingMatrix RemoteBackend::embed_tokens(std::string_view text, std::string_view model_id) const {
  if (text.empty()) throw BackendError(BackendErrorKind::kValidation, "embed: empty text");
  return wire::decode_vectors_response(post(wire::kEmbedPath, wire::encode_text_request(model_id, text)));
}

}  // namespace clozeval::lm
