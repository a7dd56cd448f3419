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

#ifndef SQLAUG_SQL_PARSER_H_
#define SQLAUG_SQL_PARSER_H_

#include <string_view>

#include "sqlaug/ast.h"
#include "sqlaug/schema.h"

namespace sqlaug {

// Parses a query of the supported subset. Keywords are case-insensitive,
// `ORDER_BY`/`GROUP_BY` are accepted as aliases, table aliases are resolved
// away and identifiers keep their spelling.
//
// With a schema, every table and column must resolve against it (throws
// UnknownIdentifierError with candidates) and FROM lists without ON clauses
// are completed along the foreign-key join path. Throws SyntaxError on
// malformed input.
SqlAst ParseSql(std::string_view text, const Schema* schema = nullptr);

}  // namespace sqlaug

#endif  // SQLAUG_SQL_PARSER_H_
