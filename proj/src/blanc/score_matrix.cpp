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

#include "clozeval/blanc/score_matrix.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "clozeval/error.hpp"

namespace clozeval::blanc {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> parse_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

ScoreMatrix::ScoreMatrix(std::vector<std::string> row_ids, std::vector<std::string> columns)
    : row_ids_(std::move(row_ids)),
      columns_(std::move(columns)),
      cells_(row_ids_.size() * columns_.size(), Cell{std::nullopt, "not computed"}) {}

std::optional<std::size_t> ScoreMatrix::row_index(std::string_view id) const {
  for (std::size_t i = 0; i < row_ids_.size(); ++i) {
    if (row_ids_[i] == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ScoreMatrix::column_index(std::string_view column) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == column) return i;
  }
  return std::nullopt;
}

const ScoreMatrix::Cell& ScoreMatrix::cell(std::size_t row, std::size_t column) const {
  return cells_.at(row * columns_.size() + column);
}

void ScoreMatrix::set(std::size_t row, std::size_t column, double value) {
  cells_.at(row * columns_.size() + column) = Cell{value, {}};
}

void ScoreMatrix::set_missing(std::size_t row, std::size_t column, std::string reason) {
  cells_.at(row * columns_.size() + column) = Cell{std::nullopt, std::move(reason)};
}

std::vector<std::pair<std::string, double>> ScoreMatrix::column_values(std::string_view column) const {
  std::vector<std::pair<std::string, double>> out;
  auto c = column_index(column);
  if (!c) return out;
  for (std::size_t r = 0; r < row_ids_.size(); ++r) {
    const auto& cl = cell(r, *c);
    if (cl.value) out.emplace_back(row_ids_[r], *cl.value);
  }
  return out;
}

void ScoreMatrix::append_columns(const ScoreMatrix& other) {
  if (other.row_ids_ != row_ids_) throw std::invalid_argument("append_columns: row ids differ");
  const std::size_t old_cols = columns_.size();
  std::vector<Cell> merged;
  merged.reserve(row_ids_.size() * (old_cols + other.columns_.size()));
  for (std::size_t r = 0; r < row_ids_.size(); ++r) {
    for (std::size_t c = 0; c < old_cols; ++c) merged.push_back(cell(r, c));
    for (std::size_t c = 0; c < other.columns_.size(); ++c) merged.push_back(other.cell(r, c));
  }
  columns_.insert(columns_.end(), other.columns_.begin(), other.columns_.end());
  cells_ = std::move(merged);
}

std::size_t ScoreMatrix::missing_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.value ? 0 : 1;
  return n;
}

void ScoreMatrix::write_csv(std::ostream& out) const {
  out << "id";
  for (const auto& c : columns_) out << ',' << csv_field(c);
  out << '\n';
  for (std::size_t r = 0; r < row_ids_.size(); ++r) {
    out << csv_field(row_ids_[r]);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      out << ',';
      if (const auto& v = cell(r, c).value) out << format_double(*v);
    }
    out << '\n';
  }
}

ScoreMatrix ScoreMatrix::read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("score CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = parse_csv_line(line);
  if (header.empty() || header.front() != "id") throw InputError("score CSV must start with an 'id' column");
  std::vector<std::string> columns(header.begin() + 1, header.end());

  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = parse_csv_line(line);
    if (fields.size() != header.size()) {
      throw InputError("score CSV line " + std::to_string(line_no) + ": expected " +
                           std::to_string(header.size()) + " fields",
                       {}, line_no);
    }
    ids.push_back(fields.front());
    rows.push_back(std::move(fields));
  }

  ScoreMatrix m(ids, columns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string& f = rows[r][c + 1];
      if (f.empty()) {
        m.set_missing(r, c, "missing in CSV");
        continue;
      }
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw InputError("score CSV: bad number '" + f + "' in column " + columns[c]);
      }
      m.set(r, c, v);
    }
  }
  return m;
}

void ScoreMatrix::write_failures_csv(std::ostream& out) const {
  out << "id,column,reason\n";
  for (std::size_t r = 0; r < row_ids_.size(); ++r) {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      const auto& cl = cell(r, c);
      if (!cl.value) {
        out << csv_field(row_ids_[r]) << ',' << csv_field(columns_[c]) << ',' << csv_field(cl.reason)
            << '\n';
      }
    }
  }
}

}  // namespace clozeval::blanc
