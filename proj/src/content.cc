// Copyright 2026 The sqlaug Authors.
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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sqlaug/error.h"
#include "sqlaug/schema.h"

namespace sqlaug {

using nlohmann::json;

bool IsNull(const Value& v) { return std::holds_alternative<std::monostate>(v); }

std::string ValueToString(const Value& v) {
  if (const double* d = std::get_if<double>(&v)) return FormatNumber(*d);
  if (const std::string* s = std::get_if<std::string>(&v)) return *s;
  return "";
}

namespace {

std::optional<double> ParseNumber(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Value> CoerceCell(const Value& raw, ColumnType type) {
  if (IsNull(raw)) return Value{};
  if (const double* d = std::get_if<double>(&raw)) {
    switch (type) {
      case ColumnType::kNumber: return raw;
      case ColumnType::kBoolean:
        if (*d == 0 || *d == 1) return raw;
        return std::nullopt;
      case ColumnType::kText:
      case ColumnType::kTime: return Value{FormatNumber(*d)};
    }
  }
  const std::string& s = std::get<std::string>(raw);
  switch (type) {
    case ColumnType::kText:
    case ColumnType::kTime: return raw;
    case ColumnType::kNumber: {
      if (s.empty()) return Value{};
      std::optional<double> d = ParseNumber(s);
      if (!d) return std::nullopt;
      return Value{*d};
    }
    case ColumnType::kBoolean: {
      std::string lower = ToLower(s);
      if (lower.empty()) return Value{};
      if (lower == "1" || lower == "t" || lower == "true" || lower == "y" || lower == "yes") {
        return Value{1.0};
      }
      if (lower == "0" || lower == "f" || lower == "false" || lower == "n" || lower == "no") {
        return Value{0.0};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

DatabaseContent::DatabaseContent(std::shared_ptr<const Schema> schema,
                                 std::vector<TableData> tables)
    : schema_(std::move(schema)), tables_(std::move(tables)) {
  tables_.resize(schema_->tables.size());
  distinct_.resize(schema_->columns.size());
  for (std::size_t t = 0; t < tables_.size(); ++t) {
    const std::vector<int>& cols = schema_->tables[t].columns;
    for (std::size_t r = 0; r < tables_[t].rows.size(); ++r) {
      if (tables_[t].rows[r].size() != cols.size()) {
        throw Error(ErrorCode::kArityMismatch,
                    schema_->tables[t].name + " row " + std::to_string(r) + " has " +
                        std::to_string(tables_[t].rows[r].size()) + " cells, expected " +
                        std::to_string(cols.size()));
      }
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::vector<Value>& out = distinct_[cols[c]];
      for (const auto& row : tables_[t].rows) {
        const Value& v = row[c];
        if (IsNull(v)) continue;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
    }
  }
}

const std::vector<Value>& DatabaseContent::DistinctValues(int column) const {
  return distinct_.at(column);
}

namespace {

Value FromJson(const json& cell) {
  if (cell.is_null()) return Value{};
  if (cell.is_boolean()) return Value{cell.get<bool>() ? 1.0 : 0.0};
  if (cell.is_number()) return Value{cell.get<double>()};
  if (cell.is_string()) return Value{cell.get<std::string>()};
  throw Error(ErrorCode::kFormat, "unsupported cell value " + cell.dump());
}

std::vector<Value> CoerceRow(const Schema& schema, int table, std::vector<Value> raw,
                             std::size_t row_index) {
  const std::vector<int>& cols = schema.tables[table].columns;
  if (raw.size() != cols.size()) {
    throw Error(ErrorCode::kArityMismatch,
                schema.tables[table].name + " row " + std::to_string(row_index) + " has " +
                    std::to_string(raw.size()) + " cells, expected " +
                    std::to_string(cols.size()));
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Column& col = schema.columns[cols[c]];
    std::optional<Value> v = CoerceCell(raw[c], col.type);
    if (!v) {
      throw Error(ErrorCode::kTypeMismatch,
                  schema.tables[table].name + " row " + std::to_string(row_index) +
                      " column " + col.name + ": '" + ValueToString(raw[c]) +
                      "' is not a " + std::string(ColumnTypeName(col.type)));
    }
    raw[c] = std::move(*v);
  }
  return raw;
}

int RequireTable(const Schema& schema, std::string_view name) {
  std::optional<int> t = schema.FindTable(name);
  if (!t) {
    throw Error(ErrorCode::kFormat,
                schema.db_id + ": content for unknown table '" + std::string(name) + "'");
  }
  return *t;
}

// RFC 4180 style; returns rows of (value, was_quoted).
std::vector<std::vector<std::pair<std::string, bool>>> ParseCsv(std::string_view text) {
  std::vector<std::vector<std::pair<std::string, bool>>> rows;
  std::vector<std::pair<std::string, bool>> row;
  std::string cell;
  bool quoted = false, in_quotes = false, any = false;
  auto end_cell = [&] {
    row.emplace_back(std::move(cell), quoted);
    cell.clear();
    quoted = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cell.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      in_quotes = quoted = any = true;
    } else if (c == ',') {
      end_cell();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !cell.empty()) {
        end_cell();
        rows.push_back(std::move(row));
        row.clear();
      }
      any = false;
    } else {
      cell.push_back(c);
      any = true;
    }
  }
  if (in_quotes) throw Error(ErrorCode::kFormat, "unterminated quoted CSV field");
  if (any || !cell.empty()) {
    end_cell();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TableData LoadCsvTable(const std::filesystem::path& path, const Schema& schema, int table) {
  auto rows = ParseCsv(ReadFile(path));
  TableData out;
  if (rows.empty()) return out;
  const std::vector<int>& cols = schema.tables[table].columns;
  std::vector<int> order;  // header position -> table column position
  for (const auto& [name, q] : rows[0]) {
    std::optional<int> c = schema.FindColumn(table, name);
    if (!c) {
      throw Error(ErrorCode::kFormat,
                  path.string() + ": unknown column '" + name + "'");
    }
    order.push_back(static_cast<int>(std::find(cols.begin(), cols.end(), *c) - cols.begin()));
  }
  if (order.size() != cols.size()) {
    throw Error(ErrorCode::kArityMismatch,
                path.string() + ": header has " + std::to_string(order.size()) +
                    " columns, expected " + std::to_string(cols.size()));
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != order.size()) {
      throw Error(ErrorCode::kArityMismatch,
                  path.string() + " row " + std::to_string(r - 1) + " has " +
                      std::to_string(rows[r].size()) + " cells, expected " +
                      std::to_string(order.size()));
    }
    std::vector<Value> raw(cols.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto& [text, was_quoted] = rows[r][i];
      raw[order[i]] = (text.empty() && !was_quoted) ? Value{} : Value{text};
    }
    out.rows.push_back(CoerceRow(schema, table, std::move(raw), r - 1));
  }
  return out;
}

}  // namespace

DatabaseContent ParseContentJson(std::string_view json_text,
                                 std::shared_ptr<const Schema> schema) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kFormat, "content must be a JSON object");
  std::vector<TableData> tables(schema->tables.size());
  for (const auto& [name, rows] : doc.items()) {
    int t = RequireTable(*schema, name);
    if (!rows.is_array()) throw Error(ErrorCode::kFormat, name + ": rows must be an array");
    const std::vector<int>& cols = schema->tables[t].columns;
    std::size_t index = 0;
    for (const json& row : rows) {
      std::vector<Value> raw;
      if (row.is_array()) {
        for (const json& cell : row) raw.push_back(FromJson(cell));
      } else if (row.is_object()) {
        raw.resize(cols.size());
        for (const auto& [col, cell] : row.items()) {
          std::optional<int> c = schema->FindColumn(t, col);
          if (!c) throw Error(ErrorCode::kFormat, name + ": unknown column '" + col + "'");
          raw[std::find(cols.begin(), cols.end(), *c) - cols.begin()] = FromJson(cell);
        }
      } else {
        throw Error(ErrorCode::kFormat, name + ": row must be an array or object");
      }
      tables[t].rows.push_back(CoerceRow(*schema, t, std::move(raw), index++));
    }
  }
  return DatabaseContent(std::move(schema), std::move(tables));
}

DatabaseContent LoadContent(const std::filesystem::path& path,
                            std::shared_ptr<const Schema> schema) {
  if (std::filesystem::is_directory(path)) {
    std::vector<TableData> tables(schema->tables.size());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.path().extension() == ".csv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      int t = RequireTable(*schema, file.stem().string());
      tables[t] = LoadCsvTable(file, *schema, t);
    }
    return DatabaseContent(std::move(schema), std::move(tables));
  }
  return ParseContentJson(ReadFile(path), std::move(schema));
}

DatabaseContent LoadContentForSchema(const std::filesystem::path& dir,
                                     std::shared_ptr<const Schema> schema) {
  std::filesystem::path json_path = dir / (schema->db_id + ".json");
  if (std::filesystem::exists(json_path)) return LoadContent(json_path, std::move(schema));
  std::filesystem::path csv_dir = dir / schema->db_id;
  if (std::filesystem::is_directory(csv_dir)) return LoadContent(csv_dir, std::move(schema));
  throw Error(ErrorCode::kIo, "no content for database '" + schema->db_id + "' under " +
                                  dir.string());
}

}  // namespace sqlaug
