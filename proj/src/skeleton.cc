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

#include "sqlaug/skeleton.h"

#include "sqlaug/error.h"

namespace sqlaug {

namespace {

using T = PatternToken;

class SkeletonParser {
 public:
  explicit SkeletonParser(const Pattern& p) : toks_(p.tokens), text_(p.ToString()) {}

  Skeleton Parse() {
    Skeleton s;
    s.left = Unit();
    if (Accept(T::kIntersect)) {
      s.set_op = SetOpKind::kIntersect;
    } else if (Accept(T::kUnion)) {
      s.set_op = SetOpKind::kUnion;
    } else if (Accept(T::kExcept)) {
      s.set_op = SetOpKind::kExcept;
    }
    if (s.set_op) s.right = Unit();
    if (pos_ != toks_.size()) Fail("unexpected token");
    return s;
  }

 private:
  bool Peek(T t) const { return pos_ < toks_.size() && toks_[pos_] == t; }
  bool Accept(T t) {
    if (!Peek(t)) return false;
    ++pos_;
    return true;
  }
  void Expect(T t) {
    if (!Accept(t)) Fail(std::string("expected ") + std::string(PatternTokenName(t)));
  }
  [[noreturn]] void Fail(const std::string& why) const {
    throw Error(ErrorCode::kParse, why + " at token " + std::to_string(pos_) + " of '" +
                                       text_ + "'");
  }

  SkExpr Expr(T slot) {
    SkExpr e;
    e.agg = Accept(T::kAgg);
    if (Accept(T::kCalc)) {
      e.calc = true;
    } else {
      Expect(slot);
    }
    return e;
  }

  SkCond Cond() {
    SkCond c;
    c.lhs = Expr(T::kC);
    Expect(T::kOp);
    if (Accept(T::kV)) {
      c.rhs = Accept(T::kV) ? SkCond::Rhs::kBetween : SkCond::Rhs::kValue;
    } else if (Accept(T::kC)) {
      c.rhs = SkCond::Rhs::kColumn;
    } else if (Accept(T::kCalc)) {
      c.rhs = SkCond::Rhs::kColumn;
      c.rhs_calc = true;
    } else if (Accept(T::kNestedOpen)) {
      c.rhs = SkCond::Rhs::kNested;
      c.nested = std::make_shared<SkUnit>(Unit());
      Expect(T::kNestedClose);
    } else {
      Fail("expected a comparison operand");
    }
    return c;
  }

  SkPredicate Pred() {
    SkPredicate p;
    p.conds.push_back(Cond());
    while (Peek(T::kAnd) || Peek(T::kOr)) {
      p.connectives.push_back(Peek(T::kAnd) ? Connective::kAnd : Connective::kOr);
      ++pos_;
      p.conds.push_back(Cond());
    }
    return p;
  }

  SkUnit Unit() {
    SkUnit u;
    Expect(T::kSelect);
    do {
      u.select.push_back(Expr(T::kA));
    } while (Peek(T::kAgg) || Peek(T::kA) || Peek(T::kCalc));
    if (Accept(T::kWhere)) u.where = Pred();
    if (Accept(T::kGroupBy)) {
      Expect(T::kC);
      u.group_columns = 1;
      while (Accept(T::kC)) ++u.group_columns;
    }
    if (Accept(T::kHaving)) u.having = Pred();
    if (Accept(T::kOrderBy)) {
      do {
        u.order.push_back(Expr(T::kC));
        Expect(T::kDir);
      } while (Peek(T::kAgg) || Peek(T::kC) || Peek(T::kCalc));
    }
    if (Accept(T::kLimit)) {
      Expect(T::kV);
      u.limit = true;
    }
    return u;
  }

  const std::vector<PatternToken>& toks_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Skeleton ParseSkeleton(const Pattern& pattern) { return SkeletonParser(pattern).Parse(); }

Predicate BuildPredicate(std::vector<Condition> conds, const std::vector<Connective>& ops) {
  std::vector<Predicate> disjuncts;
  std::vector<Predicate> run;
  auto flush = [&] {
    if (run.size() == 1) {
      disjuncts.push_back(std::move(run[0]));
    } else {
      Predicate p;
      p.op = Connective::kAnd;
      p.children = std::move(run);
      disjuncts.push_back(std::move(p));
    }
    run.clear();
  };
  for (std::size_t i = 0; i < conds.size(); ++i) {
    if (i > 0 && ops[i - 1] == Connective::kOr) flush();
    run.push_back(Predicate::Leaf(std::move(conds[i])));
  }
  flush();
  if (disjuncts.size() == 1) return std::move(disjuncts[0]);
  Predicate p;
  p.op = Connective::kOr;
  p.children = std::move(disjuncts);
  return p;
}

}  // namespace sqlaug
