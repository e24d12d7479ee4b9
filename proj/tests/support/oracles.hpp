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

// Deliberately naive reference implementations used as test oracles. They
// share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Tokens = std::vector<std::string>;

inline std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t below = 0, equal = 0;
    for (double v : x) {
      if (v < x[i]) ++below;
      if (v == x[i]) ++equal;
    }
    r[i] = static_cast<double>(below) + (static_cast<double>(equal) + 1.0) / 2.0;
  }
  return r;
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  long double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= a.size();
  mb /= b.size();
  long double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(ranks(x), ranks(y));
}

inline std::map<Tokens, int> ngrams(const Tokens& t, std::size_t n) {
  std::map<Tokens, int> out;
  for (std::size_t i = 0; i + n <= t.size(); ++i) ++out[Tokens(t.begin() + i, t.begin() + i + n)];
  return out;
}

inline int overlap(const std::map<Tokens, int>& a, const std::map<Tokens, int>& b) {
  int total = 0;
  for (const auto& [g, c] : a) {
    auto it = b.find(g);
    if (it != b.end()) total += std::min(c, it->second);
  }
  return total;
}

inline double f1(double p, double r) { return p + r == 0 ? 0.0 : 2 * p * r / (p + r); }

struct Prf {
  double p, r, f;
};

inline Prf rouge_n(const Tokens& cand, const Tokens& ref, std::size_t n) {
  const auto a = ngrams(cand, n);
  const auto b = ngrams(ref, n);
  int ca = 0, cb = 0;
  for (const auto& [g, c] : a) ca += c;
  for (const auto& [g, c] : b) cb += c;
  const int m = overlap(a, b);
  const double p = ca ? static_cast<double>(m) / ca : 0.0;
  const double r = cb ? static_cast<double>(m) / cb : 0.0;
  return {p, r, f1(p, r)};
}

inline bool is_subsequence(const Tokens& s, const Tokens& t) {
  std::size_t j = 0;
  for (const auto& tok : t) {
    if (j < s.size() && s[j] == tok) ++j;
  }
  return j == s.size();
}

// Longest common subsequence by enumerating every subset of `a`.
inline std::size_t lcs_exhaustive(const Tokens& a, const Tokens& b) {
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    Tokens s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (1u << i)) s.push_back(a[i]);
    }
    if (s.size() > best && is_subsequence(s, b)) best = s.size();
  }
  return best;
}

inline Prf rouge_l(const Tokens& cand, const Tokens& ref) {
  const double l = static_cast<double>(lcs_exhaustive(cand, ref));
  const double p = cand.empty() ? 0.0 : l / cand.size();
  const double r = ref.empty() ? 0.0 : l / ref.size();
  return {p, r, f1(p, r)};
}

// Sentence BLEU with a single reference, orders 1..4, add-one on zero
// matches for orders >= 2.
inline double bleu(const Tokens& cand, const Tokens& ref) {
  if (cand.empty()) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto a = ngrams(cand, n);
    int total = 0;
    for (const auto& [g, c] : a) total += c;
    int m = overlap(a, ngrams(ref, n));
    double p;
    if (m == 0) {
      if (n == 1) return 0.0;
      p = 1.0 / (total + 1.0);
    } else {
      p = static_cast<double>(m) / total;
    }
    log_sum += std::log(p) / 4.0;
  }
  const double c = static_cast<double>(cand.size());
  const double r = static_cast<double>(ref.size());
  const double bp = c < r ? std::exp(1.0 - r / c) : 1.0;
  return bp * std::exp(log_sum);
}

inline double js_divergence(const Tokens& p_words, const Tokens& q_words) {
  std::map<std::string, double> p, q;
  for (const auto& w : p_words) p[w] += 1.0 / p_words.size();
  for (const auto& w : q_words) q[w] += 1.0 / q_words.size();
  std::set<std::string> all;
  for (const auto& [w, v] : p) all.insert(w);
  for (const auto& [w, v] : q) all.insert(w);
  double d = 0.0;
  for (const auto& w : all) {
    const double pw = p.count(w) ? p[w] : 0.0;
    const double qw = q.count(w) ? q[w] : 0.0;
    const double m = (pw + qw) / 2.0;
    if (pw > 0) d += 0.5 * pw * std::log2(pw / m);
    if (qw > 0) d += 0.5 * qw * std::log2(qw / m);
  }
  return d;
}

}  // namespace oracle
