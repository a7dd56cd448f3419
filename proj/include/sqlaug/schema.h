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

// Relational schemas, in-memory table contents and foreign-key join paths.

#ifndef SQLAUG_SCHEMA_H_
#define SQLAUG_SCHEMA_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sqlaug/ast.h"

namespace sqlaug {

enum class ColumnType { kText, kNumber, kTime, kBoolean };

std::string_view ColumnTypeName(ColumnType type);
// Accepts the Spider spellings; "others" maps to text.
std::optional<ColumnType> ParseColumnType(std::string_view name);

struct Column {
  std::string name;          // identifier as used in SQL
  std::string natural_name;  // words used in questions, e.g. "loser age"
  ColumnType type = ColumnType::kText;
  int table = -1;
};

struct Table {
  std::string name;
  std::string natural_name;
  std::vector<int> columns;  // indices into Schema::columns
};

struct ForeignKey {
  int column = -1;      // referencing column
  int referenced = -1;  // referenced column
};

struct Schema {
  std::string db_id;
  std::vector<Table> tables;
  std::vector<Column> columns;
  std::vector<ForeignKey> foreign_keys;
  std::vector<int> primary_keys;

  // Lookups are case-insensitive.
  std::optional<int> FindTable(std::string_view name) const;
  std::optional<int> FindColumn(int table, std::string_view name) const;
  std::optional<int> FindColumn(std::string_view table, std::string_view column) const;
  bool IsPrimaryKey(int column) const;

  // Throws DuplicateName or DanglingForeignKey.
  void Validate() const;
};

// Reads a Spider-style tables.json document (a JSON array of schemas, or a
// single schema object). Uses the *_original identifier lists when present.
std::vector<Schema> LoadSchemas(const std::filesystem::path& path);
std::vector<Schema> ParseSchemas(std::string_view json_text);

// Derives a natural name from an identifier: underscores become spaces and
// the result is lower-cased.
std::string NaturalizeIdentifier(std::string_view identifier);

// ---------------------------------------------------------------------------
// Content

// A cell: null, number or text. Time values are text, booleans are 0/1.
using Value = std::variant<std::monostate, double, std::string>;

bool IsNull(const Value& v);
std::string ValueToString(const Value& v);  // "" for null

struct TableData {
  std::vector<std::vector<Value>> rows;
};

class DatabaseContent {
 public:
  DatabaseContent(std::shared_ptr<const Schema> schema, std::vector<TableData> tables);

  const Schema& schema() const { return *schema_; }
  std::shared_ptr<const Schema> schema_ptr() const { return schema_; }
  const TableData& table(int index) const { return tables_[index]; }

  // Distinct non-null values of a column in first-appearance order.
  const std::vector<Value>& DistinctValues(int column) const;

 private:
  std::shared_ptr<const Schema> schema_;
  std::vector<TableData> tables_;
  std::vector<std::vector<Value>> distinct_;
};

// Coerces a raw JSON/CSV cell to the declared column type. Returns nullopt
// when the cell cannot be represented in that type.
std::optional<Value> CoerceCell(const Value& raw, ColumnType type);

// Reads a content document (JSON object: table name -> list of rows), or a
// directory with one CSV file per table (header row first).
DatabaseContent LoadContent(const std::filesystem::path& path,
                            std::shared_ptr<const Schema> schema);
DatabaseContent ParseContentJson(std::string_view json_text,
                                 std::shared_ptr<const Schema> schema);

// Locates `<dir>/<db_id>.json` or `<dir>/<db_id>/` and loads it.
DatabaseContent LoadContentForSchema(const std::filesystem::path& dir,
                                     std::shared_ptr<const Schema> schema);

// ---------------------------------------------------------------------------
// Join paths

// Minimal FK edge set (fewest edges) connecting `tables`, with intermediate
// tables allowed. Edges are oriented away from the first table in
// case-insensitive name order and listed in breadth-first order. Throws
// Disconnected when no FK path exists.
struct JoinPath {
  std::vector<std::string> tables;  // join order, requested + intermediates
  std::vector<JoinEdge> edges;
};

// Minimal set of FK edges connecting `tables`. The spanning tree is grown
// breadth-first from `root` (default: the requested table that sorts first).
// Throws Disconnected when no FK path exists.
JoinPath FindJoinPath(const Schema& schema, const std::set<int>& tables,
                      std::optional<int> root = std::nullopt);

// Equality of identifiers ignoring ASCII case.
bool EqualsIgnoreCase(std::string_view a, std::string_view b);
std::string ToLower(std::string_view s);

}  // namespace sqlaug

#endif  // SQLAUG_SCHEMA_H_
