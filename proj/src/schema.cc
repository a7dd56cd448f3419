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
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sqlaug/error.h"
#include "sqlaug/schema.h"

namespace sqlaug {

using nlohmann::json;

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view ColumnTypeName(ColumnType type) {
  switch (type) {
    case ColumnType::kText: return "text";
    case ColumnType::kNumber: return "number";
    case ColumnType::kTime: return "time";
    case ColumnType::kBoolean: return "boolean";
  }
  return "text";
}

std::optional<ColumnType> ParseColumnType(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "text" || lower == "others" || lower == "other") return ColumnType::kText;
  if (lower == "number" || lower == "real" || lower == "int" || lower == "integer") {
    return ColumnType::kNumber;
  }
  if (lower == "time" || lower == "date" || lower == "datetime") return ColumnType::kTime;
  if (lower == "boolean" || lower == "bool") return ColumnType::kBoolean;
  return std::nullopt;
}

std::string NaturalizeIdentifier(std::string_view identifier) {
  std::string out;
  for (char c : identifier) {
    char ch = c == '_' ? ' ' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ch == ' ' && (out.empty() || out.back() == ' ')) continue;
    out.push_back(ch);
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::optional<int> Schema::FindTable(std::string_view name) const {
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (EqualsIgnoreCase(tables[i].name, name)) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> Schema::FindColumn(int table, std::string_view name) const {
  if (table < 0 || table >= static_cast<int>(tables.size())) return std::nullopt;
  for (int c : tables[table].columns) {
    if (EqualsIgnoreCase(columns[c].name, name)) return c;
  }
  return std::nullopt;
}

std::optional<int> Schema::FindColumn(std::string_view table,
                                      std::string_view column) const {
  std::optional<int> t = FindTable(table);
  if (!t) return std::nullopt;
  return FindColumn(*t, column);
}

bool Schema::IsPrimaryKey(int column) const {
  return std::find(primary_keys.begin(), primary_keys.end(), column) !=
         primary_keys.end();
}

void Schema::Validate() const {
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = i + 1; j < tables.size(); ++j) {
      if (EqualsIgnoreCase(tables[i].name, tables[j].name)) {
        throw Error(ErrorCode::kDuplicateName,
                    db_id + ": table '" + tables[j].name + "'");
      }
    }
    const std::vector<int>& cols = tables[i].columns;
    for (std::size_t a = 0; a < cols.size(); ++a) {
      for (std::size_t b = a + 1; b < cols.size(); ++b) {
        if (EqualsIgnoreCase(columns[cols[a]].name, columns[cols[b]].name)) {
          throw Error(ErrorCode::kDuplicateName, db_id + ": column '" +
                                                     tables[i].name + "." +
                                                     columns[cols[b]].name + "'");
        }
      }
    }
  }
  const int n = static_cast<int>(columns.size());
  for (const ForeignKey& fk : foreign_keys) {
    if (fk.column < 0 || fk.column >= n || fk.referenced < 0 || fk.referenced >= n) {
      throw Error(ErrorCode::kDanglingForeignKey,
                  db_id + ": foreign key references a missing column");
    }
    if (columns[fk.column].table == columns[fk.referenced].table) {
      throw Error(ErrorCode::kDanglingForeignKey,
                  db_id + ": foreign key within table '" +
                      tables[columns[fk.column].table].name + "'");
    }
  }
}

namespace {

Schema SchemaFromJson(const json& doc) {
  if (!doc.is_object() || !doc.contains("db_id") || !doc.contains("table_names") ||
      !doc.contains("column_names") || !doc.contains("column_types")) {
    throw Error(ErrorCode::kFormat,
                "schema requires db_id, table_names, column_names, column_types");
  }
  Schema s;
  s.db_id = doc.at("db_id").get<std::string>();
  const json& natural_tables = doc.at("table_names");
  const json& tables = doc.contains("table_names_original")
                           ? doc.at("table_names_original")
                           : natural_tables;
  const json& natural_columns = doc.at("column_names");
  const json& columns = doc.contains("column_names_original")
                            ? doc.at("column_names_original")
                            : natural_columns;
  const json& types = doc.at("column_types");
  if (tables.size() != natural_tables.size() || columns.size() != natural_columns.size() ||
      columns.size() != types.size()) {
    throw Error(ErrorCode::kFormat, s.db_id + ": schema list lengths disagree");
  }
  const bool has_original_tables = doc.contains("table_names_original");
  for (std::size_t i = 0; i < tables.size(); ++i) {
    Table t;
    t.name = tables[i].get<std::string>();
    t.natural_name = has_original_tables ? ToLower(natural_tables[i].get<std::string>())
                                         : NaturalizeIdentifier(t.name);
    s.tables.push_back(std::move(t));
  }
  const bool has_original_columns = doc.contains("column_names_original");
  // Spider numbers columns globally with "*" at index 0 (table -1).
  std::vector<int> remap(columns.size(), -1);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const json& entry = columns[i];
    if (!entry.is_array() || entry.size() != 2) {
      throw Error(ErrorCode::kFormat, s.db_id + ": malformed column entry");
    }
    int table = entry[0].get<int>();
    if (table < 0) continue;
    if (table >= static_cast<int>(s.tables.size())) {
      throw Error(ErrorCode::kFormat, s.db_id + ": column table index out of range");
    }
    Column c;
    c.name = entry[1].get<std::string>();
    c.natural_name = has_original_columns
                         ? ToLower(natural_columns[i][1].get<std::string>())
                         : NaturalizeIdentifier(c.name);
    std::optional<ColumnType> type = ParseColumnType(types[i].get<std::string>());
    if (!type) {
      throw Error(ErrorCode::kFormat,
                  s.db_id + ": unknown column type '" + types[i].get<std::string>() + "'");
    }
    c.type = *type;
    c.table = table;
    remap[i] = static_cast<int>(s.columns.size());
    s.tables[table].columns.push_back(remap[i]);
    s.columns.push_back(std::move(c));
  }
  auto map_index = [&](const json& v) {
    int idx = v.get<int>();
    if (idx < 0 || idx >= static_cast<int>(remap.size()) || remap[idx] < 0) {
      throw Error(ErrorCode::kDanglingForeignKey,
                  s.db_id + ": column index " + std::to_string(idx) + " does not exist");
    }
    return remap[idx];
  };
  if (doc.contains("foreign_keys")) {
    for (const json& fk : doc.at("foreign_keys")) {
      if (!fk.is_array() || fk.size() != 2) {
        throw Error(ErrorCode::kFormat, s.db_id + ": malformed foreign key");
      }
      ForeignKey key{map_index(fk[0]), map_index(fk[1])};
      // Self-references do not contribute join edges between tables.
      if (s.columns[key.column].table == s.columns[key.referenced].table) continue;
      s.foreign_keys.push_back(key);
    }
  }
  if (doc.contains("primary_keys")) {
    for (const json& pk : doc.at("primary_keys")) {
      if (pk.is_array()) {
        for (const json& part : pk) s.primary_keys.push_back(map_index(part));
      } else {
        s.primary_keys.push_back(map_index(pk));
      }
    }
  }
  s.Validate();
  return s;
}

}  // namespace

std::vector<Schema> ParseSchemas(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
  std::vector<Schema> out;
  try {
    if (doc.is_array()) {
      for (const json& entry : doc) out.push_back(SchemaFromJson(entry));
    } else {
      out.push_back(SchemaFromJson(doc));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i].db_id == out[j].db_id) {
        throw Error(ErrorCode::kDuplicateName, "db_id '" + out[i].db_id + "'");
      }
    }
  }
  return out;
}

std::vector<Schema> LoadSchemas(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseSchemas(buf.str());
}

}  // namespace sqlaug
