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

#include "sqlaug/pattern.h"

#include <array>
#include <sstream>

#include "sqlaug/error.h"

namespace sqlaug {
namespace {

constexpr std::array<std::string_view, kPatternAlphabetSize> kNames = {
    "SELECT", "WHERE", "GROUP_BY", "HAVING", "ORDER_BY", "LIMIT", "INTERSECT",
    "UNION",  "EXCEPT", "AND",     "OR",     "A",        "C",     "OP",
    "V",      "DIR",   "AGG",      "CALC",   "NESTED_OPEN", "NESTED_CLOSE"};

class Extractor {
 public:
  Pattern Take() && { return std::move(out_); }

  void Top(const Query& q) {
    Core(q.core);
    if (q.set_op) {
      switch (q.set_op->kind) {
        case SetOpKind::kIntersect: Add(PatternToken::kIntersect); break;
        case SetOpKind::kUnion: Add(PatternToken::kUnion); break;
        case SetOpKind::kExcept: Add(PatternToken::kExcept); break;
      }
      Core(q.set_op->right);
    }
  }

 private:
  void Add(PatternToken t) { out_.tokens.push_back(t); }

  void Expr(const AggExpr& e, PatternToken slot) {
    if (e.is_aggregate()) Add(PatternToken::kAgg);
    Add(e.expr.is_calc() ? PatternToken::kCalc : slot);
  }

  void Pred(const Predicate& p) {
    if (p.is_leaf()) {
      Cond(*p.leaf);
      return;
    }
    for (std::size_t i = 0; i < p.children.size(); ++i) {
      if (i > 0) Add(p.op == Connective::kAnd ? PatternToken::kAnd : PatternToken::kOr);
      Pred(p.children[i]);
    }
  }

  void Cond(const Condition& c) {
    Expr(c.lhs, PatternToken::kC);
    Add(PatternToken::kOp);
    if (std::holds_alternative<Literal>(c.rhs)) {
      Add(PatternToken::kV);
      if (c.upper) Add(PatternToken::kV);
    } else if (const auto* col = std::get_if<ColumnExpr>(&c.rhs)) {
      Add(col->is_calc() ? PatternToken::kCalc : PatternToken::kC);
    } else {
      Add(PatternToken::kNestedOpen);
      Top(*std::get<Box<Query>>(c.rhs));
      Add(PatternToken::kNestedClose);
    }
  }

  void Core(const SelectCore& core) {
    Add(PatternToken::kSelect);
    for (const SelectItem& item : core.select) Expr(item, PatternToken::kA);
    if (core.where) {
      Add(PatternToken::kWhere);
      Pred(*core.where);
    }
    if (!core.group_by.empty()) {
      Add(PatternToken::kGroupBy);
      for (std::size_t i = 0; i < core.group_by.size(); ++i) Add(PatternToken::kC);
    }
    if (core.having) {
      Add(PatternToken::kHaving);
      Pred(*core.having);
    }
    if (!core.order_by.empty()) {
      Add(PatternToken::kOrderBy);
      for (const OrderItem& item : core.order_by) {
        Expr(item.key, PatternToken::kC);
        Add(PatternToken::kDir);
      }
    }
    if (core.limit) {
      Add(PatternToken::kLimit);
      Add(PatternToken::kV);
    }
  }

  Pattern out_;
};

}  // namespace

std::string_view PatternTokenName(PatternToken t) {
  return kNames[static_cast<std::size_t>(t)];
}

std::optional<PatternToken> ParsePatternToken(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<PatternToken>(i);
  }
  return std::nullopt;
}

std::string Pattern::ToString() const {
  std::string out;
  for (PatternToken t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += PatternTokenName(t);
  }
  return out;
}

Pattern ParsePattern(std::string_view text) {
  Pattern p;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    std::optional<PatternToken> t = ParsePatternToken(word);
    if (!t) throw Error(ErrorCode::kParse, "unknown pattern token '" + word + "'");
    p.tokens.push_back(*t);
  }
  return p;
}

Pattern ExtractPattern(const Query& q) {
  Extractor e;
  e.Top(q);
  return std::move(e).Take();
}

ConstructFlags& ConstructFlags::operator|=(const ConstructFlags& o) {
  select |= o.select;
  where |= o.where;
  group |= o.group;
  having |= o.having;
  order |= o.order;
  calculation |= o.calculation;
  nested |= o.nested;
  multi_sql |= o.multi_sql;
  return *this;
}

ConstructFlags ConstructsOf(const Pattern& p) {
  ConstructFlags f;
  for (PatternToken t : p.tokens) {
    switch (t) {
      case PatternToken::kSelect: f.select = true; break;
      case PatternToken::kWhere: f.where = true; break;
      case PatternToken::kGroupBy: f.group = true; break;
      case PatternToken::kHaving: f.having = true; break;
      case PatternToken::kOrderBy: f.order = true; break;
      case PatternToken::kCalc: f.calculation = true; break;
      case PatternToken::kNestedOpen: f.nested = true; break;
      case PatternToken::kIntersect:
      case PatternToken::kUnion:
      case PatternToken::kExcept: f.multi_sql = true; break;
      default: break;
    }
  }
  return f;
}

}  // namespace sqlaug
