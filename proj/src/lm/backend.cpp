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

#include "clozeval/lm/backend.hpp"

#include <stdexcept>

namespace clozeval {

const char* to_string(BackendErrorKind kind) noexcept {
  switch (kind) {
    case BackendErrorKind::kValidation:
      return "validation";
    case BackendErrorKind::kOverLength:
      return "over_length";
    case BackendErrorKind::kUnknownModel:
      return "unknown_model";
    case BackendErrorKind::kTransport:
      return "transport";
    case BackendErrorKind::kProtocol:
      return "protocol";
  }
  return "unknown";
}

}  // namespace clozeval

namespace clozeval::lm {

void validate(const BackendDescriptor& descriptor) {
  if (descriptor.model_id.empty()) throw std::invalid_argument("descriptor: empty model_id");
  if (descriptor.max_sequence_length < 16) {
    throw std::invalid_argument("descriptor '" + descriptor.model_id +
                                "': max_sequence_length must be >= 16");
  }
}

void validate(const MaskQuery& query, const BackendDescriptor& descriptor) {
  if (query.tokens.size() > descriptor.max_sequence_length) {
    throw BackendError(BackendErrorKind::kOverLength,
                       "input of " + std::to_string(query.tokens.size()) +
                           " tokens exceeds max_sequence_length " +
                           std::to_string(descriptor.max_sequence_length) + " of '" +
                           descriptor.model_id + "'");
  }
  for (std::size_t i = 0; i < query.mask_positions.size(); ++i) {
    const std::size_t p = query.mask_positions[i];
    if (p >= query.tokens.size()) {
      throw BackendError(BackendErrorKind::kValidation,
                         "mask position " + std::to_string(p) + " out of range");
    }
    if (i > 0 && p <= query.mask_positions[i - 1]) {
      throw BackendError(BackendErrorKind::kValidation, "mask positions not strictly increasing");
    }
    if (descriptor.is_special(query.tokens[p])) {
      throw BackendError(BackendErrorKind::kValidation,
                         "mask position " + std::to_string(p) + " points at special token");
    }
  }
}

BackendDescriptor Backend::describe(std::string_view model_id) const {
  for (auto& d : models()) {
    if (d.model_id == model_id) return d;
  }
  throw BackendError(BackendErrorKind::kUnknownModel, "unknown model '" + std::string(model_id) + "'");
}

std::vector<BatchItem> Backend::batch(std::span<const MaskQuery> queries) const {
  std::vector<BatchItem> out;
  out.reserve(queries.size());
  for (const auto& q : queries) {
    try {
      out.push_back(BatchItem{predict_masked(q), std::nullopt});
    } catch (const BackendError& e) {
      out.push_back(BatchItem{std::nullopt, BatchFailure{e.kind(), e.what()}});
    }
  }
  return out;
}

}  // namespace clozeval::lm
