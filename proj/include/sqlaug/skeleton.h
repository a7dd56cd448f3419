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

#ifndef SQLAUG_SKELETON_H_
#define SQLAUG_SKELETON_H_

#include <memory>
#include <optional>
#include <vector>

#include "sqlaug/ast.h"
#include "sqlaug/pattern.h"

namespace sqlaug {

// A pattern parsed back into query structure, with slots still empty.
struct SkUnit;

struct SkExpr {
  bool agg = false;
  bool calc = false;
};

struct SkCond {
  enum class Rhs { kValue, kBetween, kColumn, kNested };
  SkExpr lhs;
  Rhs rhs = Rhs::kValue;
  bool rhs_calc = false;
  std::shared_ptr<SkUnit> nested;
};

struct SkPredicate {
  std::vector<SkCond> conds;
  std::vector<Connective> connectives;  // between consecutive conditions
};

struct SkUnit {
  std::vector<SkExpr> select;
  std::optional<SkPredicate> where;
  int group_columns = 0;
  std::optional<SkPredicate> having;
  std::vector<SkExpr> order;
  bool limit = false;
};

struct Skeleton {
  SkUnit left;
  std::optional<SetOpKind> set_op;
  SkUnit right;
};

// Throws Parse when the token sequence is not a well-formed query pattern.
Skeleton ParseSkeleton(const Pattern& pattern);

// Builds the predicate tree that extracts back to the flat condition list:
// AND binds tighter than OR.
Predicate BuildPredicate(std::vector<Condition> conds, const std::vector<Connective>& ops);

}  // namespace sqlaug

#endif  // SQLAUG_SKELETON_H_
