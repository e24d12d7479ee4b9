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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clozeval::blanc {

// One point of the BLANC parameter space: the model, the masking stride and
// minimal character lengths for whole-word, word-initial and continuation
// tokens.
struct BlancConfig {
  std::string model_id;
  int gap = 2;
  int l_normal = 4;
  int l_lead = 2;
  int l_follow = 1;

  bool operator==(const BlancConfig&) const = default;
};

// Throws std::invalid_argument unless model_id is non-empty and every
// integer parameter is >= 1.
void validate(const BlancConfig& config);

// Grid explored by the sweep: 2 x 3 x 2 x 2 = 24 parameter choices per model.
inline constexpr std::array<int, 2> kGridGaps = {2, 6};
inline constexpr std::array<int, 3> kGridNormal = {4, 5, 6};
inline constexpr std::array<int, 2> kGridLead = {1, 2};
inline constexpr std::array<int, 2> kGridFollow = {1, 100};

// bert-base-german-dbmdz-cased, gap 2, L_normal 4, L_lead 2, L_follow 1.
BlancConfig recommended_config();

// Column name of a configuration. Configurations of the recommended family
// (dbmdz-cased model, gap 2) use the short form "B_L4_Ll2_Lf1"; all others
// are qualified as "B_<model>_g<gap>_L4_Ll2_Lf1".
std::string config_name(const BlancConfig& config);

// Inverse of config_name; std::nullopt if `name` does not follow the scheme.
std::optional<BlancConfig> parse_config_name(std::string_view name);

// models x gap x L_normal x L_lead x L_follow in that nesting order.
// Throws std::invalid_argument on an empty model list.
std::vector<BlancConfig> sweep_grid(const std::vector<std::string>& models);

}  // namespace clozeval::blanc
