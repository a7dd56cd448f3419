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

// Sketch-level query patterns: the flat token form of a query with every
// table, column and value erased. Patterns are the unit of coverage
// comparison between generated and labeled data, and the contract between
// the grammar (which produces them) and the generator (which fills them).

#ifndef SQLAUG_PATTERN_H_
#define SQLAUG_PATTERN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqlaug/ast.h"

namespace sqlaug {

// The closed pattern alphabet. The order and spellings are part of the
// on-disk format of grammar files and reports; append only.
enum class PatternToken : std::uint8_t {
  kSelect,
  kWhere,
  kGroupBy,
  kHaving,
  kOrderBy,
  kLimit,
  kIntersect,
  kUnion,
  kExcept,
  kAnd,
  kOr,
  kA,     // select item column (or *)
  kC,     // column in a condition, grouping or ordering
  kOp,    // comparison operator
  kV,     // literal value
  kDir,   // sort direction
  kAgg,   // aggregate function
  kCalc,  // binary arithmetic over two columns
  kNestedOpen,
  kNestedClose,
};

inline constexpr int kPatternAlphabetSize = 20;
inline constexpr int kPatternAlphabetVersion = 1;

std::string_view PatternTokenName(PatternToken t);
std::optional<PatternToken> ParsePatternToken(std::string_view name);

struct Pattern {
  std::vector<PatternToken> tokens;

  // Tokens joined by single spaces, e.g. "SELECT A WHERE C OP V".
  std::string ToString() const;
  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

// Throws Error(kParse) on unknown token names.
Pattern ParsePattern(std::string_view text);

Pattern ExtractPattern(const Query& q);

// Query constructs present in a pattern, in the column order of the data
// statistics table.
struct ConstructFlags {
  bool select = false;
  bool where = false;
  bool group = false;
  bool having = false;
  bool order = false;
  bool calculation = false;
  bool nested = false;
  bool multi_sql = false;

  ConstructFlags& operator|=(const ConstructFlags& o);
  friend bool operator==(const ConstructFlags&, const ConstructFlags&) = default;
};

ConstructFlags ConstructsOf(const Pattern& p);

}  // namespace sqlaug

#endif  // SQLAUG_PATTERN_H_
