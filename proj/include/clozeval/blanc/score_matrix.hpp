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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clozeval::blanc {

// Scores indexed by (record id, metric/config column). A cell is either a
// value or missing with a reason.
class ScoreMatrix {
 public:
  struct Cell {
    std::optional<double> value;
    std::string reason;  // set when value is empty

    bool operator==(const Cell&) const = default;
  };

  ScoreMatrix() = default;
  ScoreMatrix(std::vector<std::string> row_ids, std::vector<std::string> columns);

  const std::vector<std::string>& row_ids() const noexcept { return row_ids_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }

  std::optional<std::size_t> row_index(std::string_view id) const;
  std::optional<std::size_t> column_index(std::string_view column) const;

  const Cell& cell(std::size_t row, std::size_t column) const;
  void set(std::size_t row, std::size_t column, double value);
  void set_missing(std::size_t row, std::size_t column, std::string reason);

  // Present values of one column, in row order.
  std::vector<std::pair<std::string, double>> column_values(std::string_view column) const;

  // Appends the columns of `other`, which must have identical row ids.
  void append_columns(const ScoreMatrix& other);

  std::size_t missing_count() const noexcept;

  // CSV: header "id,<columns...>", one row per record, values in shortest
  // round-trip decimal form, missing cells empty. Fields containing ',' '"'
  // or line breaks are quoted.
  void write_csv(std::ostream& out) const;
  static ScoreMatrix read_csv(std::istream& in);

  // Missing cells as "id,column,reason" rows.
  void write_failures_csv(std::ostream& out) const;

  bool operator==(const ScoreMatrix&) const = default;

 private:
  std::vector<std::string> row_ids_;
  std::vector<std::string> columns_;
  std::vector<Cell> cells_;  // row-major
};

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

// CSV helpers shared by the report writers.
std::string csv_field(std::string_view field);
std::vector<std::string> parse_csv_line(std::string_view line);

}  // namespace clozeval::blanc
