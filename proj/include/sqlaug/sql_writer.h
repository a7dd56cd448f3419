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

#ifndef SQLAUG_SQL_WRITER_H_
#define SQLAUG_SQL_WRITER_H_

#include <optional>
#include <string>
#include <vector>

#include "sqlaug/ast.h"

namespace sqlaug {

enum class TokenType { kKeyword, kColumn, kTable, kValue, kOther };

std::string_view TokenTypeName(TokenType type);  // "keyword", "column", ...

// Part of a unit query a token belongs to.
enum class Section { kSelect, kFrom, kWhere, kGroupBy, kHaving, kOrderBy, kLimit, kSetOp };

// One token of the canonical rendering, annotated with where it came from.
struct SqlToken {
  std::string text;
  TokenType type = TokenType::kOther;
  Section section = Section::kSelect;
  int unit = 0;        // index into WrittenQuery::units
  int depth = 0;       // 0 for top-level units, 1 inside a subquery
  bool space_before = true;
  ColumnRef column;    // kColumn: the referenced column (left side of a calc)
  std::string table;   // kTable: the table name
  std::optional<Literal> literal;  // kValue
};

struct UnitInfo {
  int parent = -1;  // enclosing unit for subqueries
  Section parent_section = Section::kWhere;
  int depth = 0;
  int set_side = 0;  // 0 left / 1 right for top-level units
};

struct WrittenQuery {
  std::vector<SqlToken> tokens;
  std::vector<UnitInfo> units;

  std::string Text() const;
  std::vector<std::string> Texts() const;
};

// Canonical single-line rendering as an annotated token stream. Column
// references are qualified only when their unit joins several tables;
// subqueries are wrapped as "( SELECT ... )".
WrittenQuery WriteQuery(const Query& q);

// WriteQuery(q).Text().
std::string SerializeSql(const Query& q);

// Renders an aggregate expression, e.g. "max(Price)" or "a / b".
std::string RenderAggExpr(const AggExpr& e, bool qualify);

}  // namespace sqlaug

#endif  // SQLAUG_SQL_WRITER_H_
