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

#ifndef SQLAUG_TESTS_SUPPORT_SQLITE_ORACLE_H_
#define SQLAUG_TESTS_SUPPORT_SQLITE_ORACLE_H_

#include <string>
#include <vector>

#include "sqlaug/ast.h"
#include "sqlaug/evaluator.h"
#include "sqlaug/schema.h"

struct sqlite3;

namespace sqlaug::testing {

// Canonical text of a cell for multiset comparison: numbers through %.12g,
// strings prefixed so "1" and 1 stay apart.
std::string CellKey(const Value& v);
std::string RowKey(const std::vector<Value>& row);

enum class Verdict { kMatch, kMismatch, kReferenceError };

struct OracleResult {
  Verdict verdict = Verdict::kMatch;
  std::string detail;
};

// Loads a DatabaseContent into an in-memory SQLite database and compares
// query results against it. Number and boolean columns are REAL, the rest
// TEXT.
class SqliteOracle {
 public:
  explicit SqliteOracle(const DatabaseContent& content);
  ~SqliteOracle();
  SqliteOracle(const SqliteOracle&) = delete;
  SqliteOracle& operator=(const SqliteOracle&) = delete;

  std::vector<std::vector<Value>> Run(const std::string& sql) const;

  // Result multisets must be equal. For a top-level ORDER BY ... LIMIT k the
  // rows ranked strictly ahead of the k-th sort key must all appear and the
  // rest must come from the rows tied with it, since SQL leaves the choice
  // among ties open.
  OracleResult Compare(const Query& q, const ResultTable& mine) const;

 private:
  sqlite3* db_ = nullptr;
};

}  // namespace sqlaug::testing

#endif  // SQLAUG_TESTS_SUPPORT_SQLITE_ORACLE_H_
