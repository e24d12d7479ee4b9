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

#include "clozeval/lm/wire.hpp"

namespace clozeval::lm::wire {

using nlohmann::json;

namespace {

[[noreturn]] void protocol_error(const std::string& what) {
  throw BackendError(BackendErrorKind::kProtocol, "wire protocol: " + what);
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object()) protocol_error("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) protocol_error(std::string("missing '") + key + "'");
  return *it;
}

std::vector<std::string> string_array(const json& arr, const char* what) {
  if (!arr.is_array()) protocol_error(std::string(what) + " must be an array");
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_string()) protocol_error(std::string(what) + " must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

json encode_fill_mask_request(std::span<const MaskQuery> queries) {
  json inputs = json::array();
  std::string model;
  for (const auto& q : queries) {
    if (model.empty()) model = q.model_id;
    if (q.model_id != model) throw std::invalid_argument("fill-mask request mixes model ids");
    inputs.push_back({{"tokens", q.tokens}, {"mask_positions", q.mask_positions}});
  }
  return {{"model", model}, {"inputs", inputs}};
}

std::vector<MaskQuery> decode_fill_mask_request(const json& body) {
  const json& model = member(body, "model");
  if (!model.is_string()) protocol_error("'model' must be a string");
  const json& inputs = member(body, "inputs");
  if (!inputs.is_array()) protocol_error("'inputs' must be an array");
  std::vector<MaskQuery> out;
  for (const auto& in : inputs) {
    MaskQuery q;
    q.model_id = model.get<std::string>();
    q.tokens = string_array(member(in, "tokens"), "tokens");
    const json& pos = member(in, "mask_positions");
    if (!pos.is_array()) protocol_error("mask_positions must be an array");
    for (const auto& p : pos) {
      if (!p.is_number_unsigned()) protocol_error("mask_positions must be non-negative integers");
      q.mask_positions.push_back(p.get<std::size_t>());
    }
    out.push_back(std::move(q));
  }
  return out;
}

json encode_fill_mask_response(std::span<const MaskPrediction> predictions) {
  json arr = json::array();
  for (const auto& p : predictions) arr.push_back(p.predicted);
  return {{"predictions", arr}};
}

std::vector<MaskPrediction> decode_fill_mask_response(const json& body,
                                                      std::span<const MaskQuery> queries) {
  const json& arr = member(body, "predictions");
  if (!arr.is_array() || arr.size() != queries.size()) {
    protocol_error("predictions count does not match inputs");
  }
  std::vector<MaskPrediction> out;
  out.reserve(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    MaskPrediction p{string_array(arr[i], "predictions")};
    if (p.predicted.size() != queries[i].mask_positions.size()) {
      protocol_error("prediction " + std::to_string(i) + " not aligned with mask positions");
    }
    out.push_back(std::move(p));
  }
  return out;
}

json encode_text_request(std::string_view model_id, std::string_view text) {
  return {{"model", std::string(model_id)}, {"text", std::string(text)}};
}

json encode_tokens_response(const std::vector<std::string>& tokens) { return {{"tokens", tokens}}; }

std::vector<std::string> decode_tokens_response(const json& body) {
  return string_array(member(body, "tokens"), "tokens");
}

json encode_vectors_response(const EmbeddingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    auto r = m.row(i);
    rows.push_back(std::vector<float>(r.begin(), r.end()));
  }
  return {{"vectors", rows}};
}

EmbeddingMatrix decode_vectors_response(const json& body) {
  const json& rows = member(body, "vectors");
  if (!rows.is_array()) protocol_error("'vectors' must be an array");
  EmbeddingMatrix m;
  m.rows = rows.size();
  for (const auto& r : rows) {
    if (!r.is_array()) protocol_error("vector rows must be arrays");
    if (m.dim == 0) m.dim = r.size();
    if (r.size() != m.dim || m.dim == 0) protocol_error("ragged or empty embedding rows");
    for (const auto& x : r) {
      if (!x.is_number()) protocol_error("vector entries must be numbers");
      m.data.push_back(x.get<float>());
    }
  }
  return m;
}

json encode_descriptor(const BackendDescriptor& d) {
  return {{"model_id", d.model_id},
          {"max_sequence_length", d.max_sequence_length},
          {"continuation_marker", d.continuation_marker},
          {"embedding_dimension", d.embedding_dimension},
          {"lowercase", d.lowercase},
          {"loaded", d.loaded},
          {"cls_token", d.cls_token},
          {"sep_token", d.sep_token},
          {"mask_token", d.mask_token}};
}

BackendDescriptor decode_descriptor(const json& body) {
  BackendDescriptor d;
  const json& id = member(body, "model_id");
  if (!id.is_string()) protocol_error("model_id must be a string");
  d.model_id = id.get<std::string>();
  d.max_sequence_length = body.value("max_sequence_length", d.max_sequence_length);
  d.continuation_marker = body.value("continuation_marker", d.continuation_marker);
  d.embedding_dimension = body.value("embedding_dimension", d.embedding_dimension);
  d.lowercase = body.value("lowercase", d.lowercase);
  d.loaded = body.value("loaded", d.loaded);
  d.cls_token = body.value("cls_token", d.cls_token);
  d.sep_token = body.value("sep_token", d.sep_token);
  d.mask_token = body.value("mask_token", d.mask_token);
  return d;
}

json encode_models_response(std::span<const BackendDescriptor> models) {
  json arr = json::array();
  for (const auto& d : models) arr.push_back(encode_descriptor(d));
  return {{"models", arr}};
}

std::vector<BackendDescriptor> decode_models_response(const json& body) {
  const json& arr = member(body, "models");
  if (!arr.is_array()) protocol_error("'models' must be an array");
  std::vector<BackendDescriptor> out;
  for (const auto& d : arr) out.push_back(decode_descriptor(d));
  return out;
}

json encode_error(std::string_view message) { return {{"error", std::string(message)}}; }

int http_status(BackendErrorKind kind) noexcept {
  switch (kind) {
    case BackendErrorKind::kValidation:
      return 400;
    case BackendErrorKind::kUnknownModel:
      return 404;
    case BackendErrorKind::kOverLength:
      return 413;
    case BackendErrorKind::kTransport:
    case BackendErrorKind::kProtocol:
      return 502;
  }
  return 500;
}

}  // namespace clozeval::lm::wire
