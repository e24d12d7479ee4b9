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

// Brute-force BLANC-help counts computed straight from the definition, one
// backend call per (sentence, offset) and input variant.

#include <cstddef>
#include <string>
#include <vector>

#include "clozeval/lm/backend.hpp"

namespace oracle {

struct BlancCounts {
  std::size_t s00 = 0, s01 = 0, s10 = 0, s11 = 0;
  std::size_t n() const { return s00 + s01 + s10 + s11; }
  double score() const { return (static_cast<double>(s01) - static_cast<double>(s10)) / static_cast<double>(n()); }
};

struct BlancParams {
  std::size_t gap, l_normal, l_lead, l_follow;
};

inline std::size_t utf8_length(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

inline std::string strip(const std::string& t) { return t.rfind("##", 0) == 0 ? t.substr(2) : t; }

inline bool eligible(const std::vector<std::string>& raw, std::size_t p, const BlancParams& k) {
  const bool follow = raw[p].rfind("##", 0) == 0;
  const bool lead = !follow && p + 1 < raw.size() && raw[p + 1].rfind("##", 0) == 0;
  const std::size_t need = follow ? k.l_follow : lead ? k.l_lead : k.l_normal;
  return utf8_length(strip(raw[p])) >= need;
}

inline BlancCounts blanc_counts(const std::vector<std::string>& summary,
                                const std::vector<std::vector<std::string>>& sentences, const BlancParams& k,
                                const clozeval::lm::Backend& backend, const std::string& model,
                                const std::string& context) {
  BlancCounts c;
  for (const auto& raw : sentences) {
    for (std::size_t offset = 0; offset < k.gap; ++offset) {
      std::vector<std::size_t> masked;
      for (std::size_t p = offset; p < raw.size(); p += k.gap) {
        if (eligible(raw, p, k)) masked.push_back(p);
      }
      if (masked.empty()) continue;
      auto build = [&](bool assisted) {
        clozeval::lm::MaskQuery q;
        q.model_id = model;
        q.context = context;
        q.tokens.push_back("[CLS]");
        for (const auto& t : summary) q.tokens.push_back(assisted ? t : std::string("."));
        q.tokens.push_back("[SEP]");
        for (const auto& t : raw) q.tokens.push_back(t);
        q.tokens.push_back("[SEP]");
        for (auto p : masked) q.mask_positions.push_back(summary.size() + 2 + p);
        return q;
      };
      const auto u = backend.predict_masked(build(false)).predicted;
      const auto a = backend.predict_masked(build(true)).predicted;
      for (std::size_t i = 0; i < masked.size(); ++i) {
        const std::string target = strip(raw[masked[i]]);
        const bool uo = strip(u[i]) == target;
        const bool ao = strip(a[i]) == target;
        if (uo && ao) ++c.s11;
        else if (uo) ++c.s10;
        else if (ao) ++c.s01;
        else ++c.s00;
      }
    }
  }
  return c;
}

}  // namespace oracle
