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

#include "clozeval/lexical/js_similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clozeval/lexical/rouge.hpp"

namespace clozeval::lexical {

WordDistribution word_distribution(std::string_view text) {
  WordDistribution d;
  for (auto& w : lexical_tokens(text)) {
    ++d.counts[std::move(w)];
    ++d.total;
  }
  if (d.total == 0) throw std::invalid_argument("word distribution of text without words");
  return d;
}

namespace {

double half_kl_term(double x, double m) { return x > 0.0 ? 0.5 * x * std::log2(x / m) : 0.0; }

}  // namespace

double js_divergence(const WordDistribution& p, const WordDistribution& q) {
  if (p.total == 0 || q.total == 0) throw std::invalid_argument("js_divergence: empty distribution");
  const auto np = static_cast<double>(p.total);
  const auto nq = static_cast<double>(q.total);

  // Merge the two ordered vocabularies; each word contributes
  // (term_p + term_q), which is the same sum when p and q are swapped.
  double jsd = 0.0;
  auto ip = p.counts.begin();
  auto iq = q.counts.begin();
  while (ip != p.counts.end() || iq != q.counts.end()) {
    double pw = 0.0, qw = 0.0;
    if (iq == q.counts.end() || (ip != p.counts.end() && ip->first < iq->first)) {
      pw = static_cast<double>(ip->second) / np;
      ++ip;
    } else if (ip == p.counts.end() || iq->first < ip->first) {
      qw = static_cast<double>(iq->second) / nq;
      ++iq;
    } else {
      pw = static_cast<double>(ip->second) / np;
      qw = static_cast<double>(iq->second) / nq;
      ++ip;
      ++iq;
    }
    const double m = 0.5 * (pw + qw);
    jsd += half_kl_term(pw, m) + half_kl_term(qw, m);
  }
  return std::clamp(jsd, 0.0, 1.0);
}

double js_similarity(std::string_view summary, std::string_view source) {
  return 1.0 - js_divergence(word_distribution(summary), word_distribution(source));
}

}  // namespace clozeval::lexical
