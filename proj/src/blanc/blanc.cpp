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

#include "clozeval/blanc/blanc.hpp"

#include "clozeval/error.hpp"
#include "clozeval/text/sentences.hpp"
#include "clozeval/text/unicode.hpp"

namespace clozeval::blanc {

BlancScore finalize(std::size_t s00, std::size_t s01, std::size_t s10, std::size_t s11) {
  BlancScore s{s00, s01, s10, s11, s00 + s01 + s10 + s11, 0.0};
  if (s.n == 0) throw UnmaskableDocumentError("no token could be masked");
  s.score = (static_cast<double>(s.s01) - static_cast<double>(s.s10)) / static_cast<double>(s.n);
  return s;
}

InputPair assemble_pair(const std::vector<std::string>& summary_tokens,
                        const text::SentenceTokens& sentence, const MaskingPlan& plan,
                        const lm::BackendDescriptor& backend) {
  const std::size_t fixed = sentence.tokens.size() + 3;  // [CLS] [SEP] ... [SEP]
  if (fixed > backend.max_sequence_length) {
    throw BackendError(BackendErrorKind::kOverLength,
                       "sentence " + std::to_string(sentence.sentence_index) + " of " +
                           std::to_string(sentence.tokens.size()) +
                           " tokens does not fit max_sequence_length " +
                           std::to_string(backend.max_sequence_length));
  }
  const std::size_t keep = std::min(summary_tokens.size(), backend.max_sequence_length - fixed);
  const std::size_t prefix = keep + 2;

  InputPair pair;
  pair.summary_tokens_used = keep;
  for (auto* q : {&pair.assisted, &pair.unassisted}) {
    q->model_id = backend.model_id;
    q->tokens.reserve(fixed + keep);
    q->tokens.push_back(backend.cls_token);
  }
  pair.assisted.role = lm::QueryRole::kAssisted;
  pair.unassisted.role = lm::QueryRole::kUnassisted;

  pair.assisted.tokens.insert(pair.assisted.tokens.end(), summary_tokens.begin(),
                              summary_tokens.begin() + static_cast<std::ptrdiff_t>(keep));
  pair.unassisted.tokens.insert(pair.unassisted.tokens.end(), keep, std::string(kFillerToken));

  for (auto* q : {&pair.assisted, &pair.unassisted}) {
    q->tokens.push_back(backend.sep_token);
    for (const auto& t : sentence.tokens) q->tokens.push_back(text::raw_form(t, backend.continuation_marker));
    q->tokens.push_back(backend.sep_token);
    q->mask_positions.reserve(plan.masked_positions.size());
    for (auto p : plan.masked_positions) q->mask_positions.push_back(p + prefix);
  }
  return pair;
}

TokenizedDocument tokenize_document(const corpus::CorpusRecord& record, std::string_view model_id,
                                    const lm::Backend& backend) {
  TokenizedDocument doc;
  doc.record_id = record.id;
  doc.descriptor = backend.describe(model_id);
  doc.summary_tokens = backend.tokenize(record.summary, model_id);
  const auto sentences = text::split_sentences(record.source);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    auto raw = backend.tokenize(sentences[i], model_id);
    if (raw.empty()) continue;
    doc.sentences.push_back(
        text::SentenceTokens{i, text::classify_tokens(raw, doc.descriptor.continuation_marker)});
  }
  return doc;
}

namespace {

struct PendingPlan {
  const text::SentenceTokens* sentence;
  MaskingPlan plan;
};

}  // namespace

BlancScore blanc_help(const TokenizedDocument& doc, const BlancConfig& config,
                      const lm::Backend& backend, const BlancOptions& options) {
  validate(config);
  if (config.model_id != doc.descriptor.model_id) {
    throw std::invalid_argument("blanc_help: document tokenized for '" + doc.descriptor.model_id +
                                "' but config uses '" + config.model_id + "'");
  }
  const std::string& marker = doc.descriptor.continuation_marker;

  std::vector<PendingPlan> plans;
  std::vector<lm::MaskQuery> queries;
  for (const auto& sentence : doc.sentences) {
    for (auto& plan : build_masking_plans(sentence, config)) {
      InputPair pair = assemble_pair(doc.summary_tokens, sentence, plan, doc.descriptor);
      pair.assisted.context = doc.record_id;
      pair.unassisted.context = doc.record_id;
      queries.push_back(std::move(pair.unassisted));
      queries.push_back(std::move(pair.assisted));
      plans.push_back(PendingPlan{&sentence, std::move(plan)});
    }
  }
  if (plans.empty()) {
    throw UnmaskableDocumentError("record '" + doc.record_id + "': no token is maskable under " +
                                  config_name(config));
  }

  const auto results = backend.batch(queries);
  if (results.size() != queries.size()) {
    throw BackendError(BackendErrorKind::kProtocol, "batch returned a wrong number of results");
  }

  auto normalize = [&](std::string_view token) {
    std::string s(text::strip_marker(token, marker));
    return options.case_insensitive ? text::to_lower(s) : s;
  };

  std::size_t s00 = 0, s01 = 0, s10 = 0, s11 = 0;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const auto& unassisted = results[2 * i];
    const auto& assisted = results[2 * i + 1];
    for (const auto* r : {&unassisted, &assisted}) {
      if (!r->ok()) {
        throw BackendError(r->failure->kind,
                           "record '" + doc.record_id + "' sentence " +
                               std::to_string(plans[i].plan.sentence_index) + ": " + r->failure->message);
      }
    }
    const auto& positions = plans[i].plan.masked_positions;
    if (unassisted.prediction->predicted.size() != positions.size() ||
        assisted.prediction->predicted.size() != positions.size()) {
      throw BackendError(BackendErrorKind::kProtocol, "prediction count does not match mask count");
    }
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const std::string target = normalize(plans[i].sentence->tokens[positions[k]].surface);
      const bool u = normalize(unassisted.prediction->predicted[k]) == target;
      const bool a = normalize(assisted.prediction->predicted[k]) == target;
      if (u && a) {
        ++s11;
      } else if (u) {
        ++s10;
      } else if (a) {
        ++s01;
      } else {
        ++s00;
      }
    }
  }
  return finalize(s00, s01, s10, s11);
}

BlancScore blanc_help(const corpus::CorpusRecord& record, const BlancConfig& config,
                      const lm::Backend& backend, const BlancOptions& options) {
  validate(config);
  return blanc_help(tokenize_document(record, config.model_id, backend), config, backend, options);
}

}  // namespace clozeval::blanc
