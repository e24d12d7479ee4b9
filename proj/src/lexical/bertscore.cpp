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

#include "clozeval/lexical/bertscore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace clozeval::lexical {

namespace {

std::vector<float> unit_rows(const lm::EmbeddingMatrix& m, const simd::KernelTable& k) {
  std::vector<float> out(m.data);
  for (std::size_t i = 0; i < m.rows; ++i) {
    float* row = out.data() + i * m.dim;
    const float sq = k.dot_f32(row, row, m.dim);
    if (sq <= 0.0f) continue;  // zero vector: cosine 0 against everything
    const float inv = 1.0f / std::sqrt(sq);
    for (std::size_t d = 0; d < m.dim; ++d) row[d] *= inv;
  }
  return out;
}

}  // namespace

PrfScore bertscore_from_embeddings(const lm::EmbeddingMatrix& candidate,
                                   const lm::EmbeddingMatrix& reference, const simd::KernelTable& kernels) {
  if (candidate.rows == 0 || reference.rows == 0) return {};
  if (candidate.dim != reference.dim) throw std::invalid_argument("bertscore: embedding dimensions differ");

  const auto a = unit_rows(candidate, kernels);
  const auto b = unit_rows(reference, kernels);
  std::vector<float> sim(candidate.rows * reference.rows);
  kernels.pairwise_dot_f32(a.data(), candidate.rows, b.data(), reference.rows, candidate.dim, sim.data());

  std::vector<double> col_best(reference.rows, -std::numeric_limits<double>::infinity());
  double precision = 0.0;
  for (std::size_t i = 0; i < candidate.rows; ++i) {
    double row_best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < reference.rows; ++j) {
      const double s = sim[i * reference.rows + j];
      row_best = std::max(row_best, s);
      col_best[j] = std::max(col_best[j], s);
    }
    precision += row_best;
  }
  double recall = 0.0;
  for (double s : col_best) recall += s;
  precision /= static_cast<double>(candidate.rows);
  recall /= static_cast<double>(reference.rows);
  return PrfScore::from(precision, recall);
}

PrfScore bertscore(std::string_view candidate, std::string_view reference, const lm::Backend& backend,
                   std::string_view model_id) {
  return bertscore_from_embeddings(backend.embed_tokens(candidate, model_id),
                                   backend.embed_tokens(reference, model_id));
}

double bertscore_f(std::string_view candidate, std::string_view reference, const lm::Backend& backend,
                   std::string_view model_id) {
  return bertscore(candidate, reference, backend, model_id).f1;
}

double bertscore_f_max(std::string_view candidate, std::span<const std::string> references,
                       const lm::Backend& backend, std::string_view model_id) {
  if (references.empty()) return 0.0;
  const auto cand = backend.embed_tokens(candidate, model_id);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& ref : references) {
    best = std::max(best, bertscore_from_embeddings(cand, backend.embed_tokens(ref, model_id)).f1);
  }
  return best;
}

}  // namespace clozeval::lexical
