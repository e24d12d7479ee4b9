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

#include "clozeval/blanc/config.hpp"

#include <charconv>
#include <stdexcept>

#include "clozeval/lm/backend.hpp"

namespace clozeval::blanc {

namespace {

constexpr int kRecommendedGap = 2;

// Parses "<prefix><digits>" into the integer, requiring a positive value.
std::optional<int> tagged_int(std::string_view part, std::string_view prefix) {
  if (!part.starts_with(prefix)) return std::nullopt;
  part.remove_prefix(prefix.size());
  if (part.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
  if (ec != std::errc{} || ptr != part.data() + part.size() || value < 1) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

void validate(const BlancConfig& c) {
  if (c.model_id.empty()) throw std::invalid_argument("BLANC config: empty model id");
  if (c.gap < 1 || c.l_normal < 1 || c.l_lead < 1 || c.l_follow < 1) {
    throw std::invalid_argument("BLANC config: gap and length thresholds must be >= 1");
  }
}

BlancConfig recommended_config() {
  return BlancConfig{std::string(lm::kGermanDbmdzCased), kRecommendedGap, 4, 2, 1};
}

std::string config_name(const BlancConfig& c) {
  std::string name = "B_";
  if (c.model_id != lm::kGermanDbmdzCased || c.gap != kRecommendedGap) {
    name += c.model_id + "_g" + std::to_string(c.gap) + "_";
  }
  name += "L" + std::to_string(c.l_normal) + "_Ll" + std::to_string(c.l_lead) + "_Lf" +
          std::to_string(c.l_follow);
  return name;
}

std::optional<BlancConfig> parse_config_name(std::string_view name) {
  auto parts = split(name, '_');
  if (parts.size() < 4 || parts.front() != "B") return std::nullopt;
  const std::size_t n = parts.size();
  auto l_normal = tagged_int(parts[n - 3], "L");
  auto l_lead = tagged_int(parts[n - 2], "Ll");
  auto l_follow = tagged_int(parts[n - 1], "Lf");
  if (!l_normal || !l_lead || !l_follow) return std::nullopt;

  BlancConfig c;
  c.l_normal = *l_normal;
  c.l_lead = *l_lead;
  c.l_follow = *l_follow;
  if (n == 4) {
    c.model_id = std::string(lm::kGermanDbmdzCased);
    c.gap = kRecommendedGap;
    return c;
  }
  if (n < 6) return std::nullopt;
  auto gap = tagged_int(parts[n - 4], "g");
  if (!gap) return std::nullopt;
  c.gap = *gap;
  for (std::size_t i = 1; i < n - 4; ++i) {
    if (i > 1) c.model_id += '_';
    c.model_id += parts[i];
  }
  if (c.model_id.empty()) return std::nullopt;
  // The short form is canonical for the recommended family.
  if (config_name(c) != name) return std::nullopt;
  return c;
}

std::vector<BlancConfig> sweep_grid(const std::vector<std::string>& models) {
  if (models.empty()) throw std::invalid_argument("sweep_grid: no models given");
  std::vector<BlancConfig> out;
  out.reserve(models.size() * 24);
  for (const auto& m : models) {
    for (int gap : kGridGaps) {
      for (int ln : kGridNormal) {
        for (int ll : kGridLead) {
          for (int lf : kGridFollow) out.push_back(BlancConfig{m, gap, ln, ll, lf});
        }
      }
    }
  }
  return out;
}

}  // namespace clozeval::blanc
