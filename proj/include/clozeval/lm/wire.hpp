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

// JSON wire protocol shared by the remote client and any server speaking it.
//
//   POST /v1/fill-mask  {"model": m, "inputs": [{"tokens": [...], "mask_positions": [...]}]}
//                       -> {"predictions": [[tok, ...], ...]}
//   POST /v1/tokenize   {"model": m, "text": t} -> {"tokens": [...]}
//   POST /v1/embed      {"model": m, "text": t} -> {"vectors": [[...], ...]}
//   GET  /v1/models     -> {"models": [descriptor, ...]}
//   GET  /healthz       -> 200
//
// Errors: 400 validation, 404 unknown model, 413 over-length, 503 model
// loading; the body is {"error": message}.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clozeval/lm/backend.hpp"

namespace clozeval::lm::wire {

inline constexpr std::string_view kFillMaskPath = "/v1/fill-mask";
inline constexpr std::string_view kTokenizePath = "/v1/tokenize";
inline constexpr std::string_view kEmbedPath = "/v1/embed";
inline constexpr std::string_view kModelsPath = "/v1/models";
inline constexpr std::string_view kHealthPath = "/healthz";

// All queries in one request must share a model id.
nlohmann::json encode_fill_mask_request(std::span<const MaskQuery> queries);
std::vector<MaskQuery> decode_fill_mask_request(const nlohmann::json& body);

nlohmann::json encode_fill_mask_response(std::span<const MaskPrediction> predictions);
// Throws BackendError(kProtocol) on shape mismatch with `queries`.
std::vector<MaskPrediction> decode_fill_mask_response(const nlohmann::json& body,
                                                      std::span<const MaskQuery> queries);

nlohmann::json encode_text_request(std::string_view model_id, std::string_view text);

nlohmann::json encode_tokens_response(const std::vector<std::string>& tokens);
std::vector<std::string> decode_tokens_response(const nlohmann::json& body);

nlohmann::json encode_vectors_response(const EmbeddingMatrix& m);
EmbeddingMatrix decode_vectors_response(const nlohmann::json& body);

nlohmann::json encode_descriptor(const BackendDescriptor& d);
BackendDescriptor decode_descriptor(const nlohmann::json& body);
nlohmann::json encode_models_response(std::span<const BackendDescriptor> models);
std::vector<BackendDescriptor> decode_models_response(const nlohmann::json& body);

nlohmann::json encode_error(std::string_view message);

// HTTP status for a backend error kind (400/404/413/502).
int http_status(BackendErrorKind kind) noexcept;

}  // namespace clozeval::lm::wire
