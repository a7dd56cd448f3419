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

#include "sqlite_oracle.h"

#include <sqlite3.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "sqlaug/sql_writer.h"

namespace sqlaug::testing {

namespace {

std::string Quote(const std::string& ident) { return "\"" + ident + "\""; }

std::string SqlLiteral(const Value& v) {
  if (IsNull(v)) return "NULL";
  if (const double* d = std::get_if<double>(&v)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", *d);
    return buf;
  }
  std::string out = "'";
  for (char c : std::get<std::string>(v)) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

void Exec(sqlite3* db, const std::string& sql) {
  char* err = nullptr;
  if (sqlite3_exec(db, sql.c_str(), nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown";
    sqlite3_free(err);
    throw std::runtime_error("sqlite: " + msg + " in " + sql);
  }
}

std::string Join(const std::vector<std::string>& rows) {
  std::string out;
  for (const std::string& r : rows) out += "[" + r + "] ";
  return out;
}

std::string Describe(std::vector<std::string> ref, std::vector<std::string> mine) {
  std::sort(ref.begin(), ref.end());
  std::sort(mine.begin(), mine.end());
  return "reference " + Join(ref) + "| mine " + Join(mine);
}

}  // namespace

std::string CellKey(const Value& v) {
  if (IsNull(v)) return "NULL";
  if (const double* d = std::get_if<double>(&v)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", *d);
    return buf;
  }
  return "s:" + std::get<std::string>(v);
}

std::string RowKey(const std::vector<Value>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += '|';
    out += CellKey(row[i]);
  }
  return out;
}

SqliteOracle::SqliteOracle(const DatabaseContent& content) {
  if (sqlite3_open(":memory:", &db_) != SQLITE_OK) throw std::runtime_error("sqlite open");
  const Schema& s = content.schema();
  Exec(db_, "BEGIN");
  for (std::size_t t = 0; t < s.tables.size(); ++t) {
    std::string ddl = "CREATE TABLE " + Quote(s.tables[t].name) + " (";
    for (std::size_t k = 0; k < s.tables[t].columns.size(); ++k) {
      const Column& col = s.columns[s.tables[t].columns[k]];
      bool numeric = col.type == ColumnType::kNumber || col.type == ColumnType::kBoolean;
      ddl += (k ? ", " : "") + Quote(col.name) + (numeric ? " REAL" : " TEXT");
    }
    Exec(db_, ddl + ")");
    for (const std::vector<Value>& row : content.table(static_cast<int>(t)).rows) {
      std::string ins = "INSERT INTO " + Quote(s.tables[t].name) + " VALUES (";
      for (std::size_t k = 0; k < row.size(); ++k) ins += (k ? ", " : "") + SqlLiteral(row[k]);
      Exec(db_, ins + ")");
    }
  }
  Exec(db_, "COMMIT");
}

SqliteOracle::~SqliteOracle() { sqlite3_close(db_); }

std::vector<std::vector<Value>> SqliteOracle::Run(const std::string& sql) const {
  sqlite3_stmt* st = nullptr;
  if (sqlite3_prepare_v2(db_, sql.c_str(), -1, &st, nullptr) != SQLITE_OK) {
    throw std::runtime_error(std::string("sqlite: ") + sqlite3_errmsg(db_) + " in " + sql);
  }
  std::vector<std::vector<Value>> rows;
  int rc;
  while ((rc = sqlite3_step(st)) == SQLITE_ROW) {
    std::vector<Value> row;
    for (int k = 0; k < sqlite3_column_count(st); ++k) {
      switch (sqlite3_column_type(st, k)) {
        case SQLITE_NULL:
          row.emplace_back();
          break;
        case SQLITE_TEXT:
          row.emplace_back(std::string(reinterpret_cast<const char*>(sqlite3_column_text(st, k))));
          break;
        default:
          row.emplace_back(sqlite3_column_double(st, k));
      }
    }
    rows.push_back(std::move(row));
  }
  sqlite3_finalize(st);
  if (rc != SQLITE_DONE) throw std::runtime_error(std::string("sqlite step: ") + sqlite3_errmsg(db_));
  return rows;
}

OracleResult SqliteOracle::Compare(const Query& q, const ResultTable& mine) const {
  std::vector<std::string> got;
  for (const auto& row : mine.rows) got.push_back(RowKey(row));

  const SelectCore& core = q.core;
  bool tie_sensitive = !q.set_op && core.limit && !core.order_by.empty();
  if (!tie_sensitive) {
    std::vector<std::string> ref;
    try {
      for (const auto& row : Run(SerializeSql(q))) ref.push_back(RowKey(row));
    } catch (const std::exception& e) {
      return {Verdict::kReferenceError, e.what()};
    }
    std::vector<std::string> a = ref, b = got;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return {};
    return {Verdict::kMismatch, Describe(ref, got)};
  }

  // Full ordering with the sort keys appended to each row.
  Query full = q;
  full.core.limit.reset();
  for (const OrderItem& o : core.order_by) full.core.select.push_back(o.key);
  std::vector<std::vector<Value>> ranked;
  try {
    ranked = Run(SerializeSql(full));
  } catch (const std::exception& e) {
    return {Verdict::kReferenceError, e.what()};
  }
  std::size_t width = core.select.size();
  std::size_t k = static_cast<std::size_t>(*core.limit);
  std::size_t expect = std::min(k, ranked.size());
  if (got.size() != expect) {
    return {Verdict::kMismatch, "row count " + std::to_string(got.size()) + " != " +
                                    std::to_string(expect)};
  }
  if (expect == 0) return {};
  auto projection = [&](const std::vector<Value>& r) {
    return RowKey(std::vector<Value>(r.begin(), r.begin() + width));
  };
  auto sort_key = [&](const std::vector<Value>& r) {
    return RowKey(std::vector<Value>(r.begin() + width, r.end()));
  };
  std::string boundary = sort_key(ranked[expect - 1]);
  std::map<std::string, int> remaining;
  for (const std::string& g : got) ++remaining[g];
  std::map<std::string, int> ties;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    std::string key = sort_key(ranked[i]);
    if (key == boundary) {
      ++ties[projection(ranked[i])];
    } else if (i < expect) {
      // Ranked strictly ahead of the boundary key: mandatory.
      std::string p = projection(ranked[i]);
      if (remaining[p]-- <= 0) return {Verdict::kMismatch, "missing row " + p};
    }
  }
  for (const auto& [row, n] : remaining) {
    if (n > 0 && ties[row] < n) return {Verdict::kMismatch, "row outside the tie group " + row};
  }
  return {};
}

}  // namespace sqlaug::testing
