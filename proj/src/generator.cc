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

#include "sqlaug/generator.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "sqlaug/evaluator.h"
#include "sqlaug/random.h"
#include "sqlaug/skeleton.h"
#include "sqlaug/sql_writer.h"

namespace sqlaug {

namespace {

struct FillFailure {
  std::string reason;
  bool incompatible = false;
};

[[noreturn]] void Incompatible(const std::string& why) { throw FillFailure{why, true}; }
[[noreturn]] void Unfillable(const std::string& why) { throw FillFailure{why, false}; }

bool IsNumeric(ColumnType t) { return t == ColumnType::kNumber || t == ColumnType::kBoolean; }

std::vector<CompareOp> OpsFor(ColumnType t) {
  switch (t) {
    case ColumnType::kNumber:
    case ColumnType::kTime:
      return {CompareOp::kEq, CompareOp::kNe, CompareOp::kGt,
              CompareOp::kGe, CompareOp::kLt, CompareOp::kLe};
    case ColumnType::kText:
      return {CompareOp::kEq, CompareOp::kNe, CompareOp::kLike};
    case ColumnType::kBoolean:
      return {CompareOp::kEq, CompareOp::kNe};
  }
  return {CompareOp::kEq};
}

const std::vector<CompareOp> kNumericOps = {CompareOp::kEq, CompareOp::kNe, CompareOp::kGt,
                                            CompareOp::kGe, CompareOp::kLt, CompareOp::kLe};

std::optional<std::string> StaticIssue(const SkUnit& u, bool nested) {
  bool any_agg = std::any_of(u.select.begin(), u.select.end(), [](auto& e) { return e.agg; }) ||
                 std::any_of(u.order.begin(), u.order.end(), [](auto& e) { return e.agg; }) ||
                 u.having.has_value();
  if (u.having && u.group_columns == 0) return "HAVING without GROUP BY";
  int plain_select = 0;
  for (const SkExpr& e : u.select) {
    if (e.agg) continue;
    ++plain_select;
    if (u.group_columns > 0 && e.calc) return "arithmetic over grouped columns";
  }
  if (any_agg && u.group_columns == 0) {
    if (plain_select > 0) return "plain select item next to an aggregate without GROUP BY";
    for (const SkExpr& e : u.order) {
      if (!e.agg) return "plain order key in an aggregate query";
    }
  }
  if (u.group_columns > 0) {
    if (plain_select > u.group_columns) return "more plain select items than group columns";
    for (const SkExpr& e : u.order) {
      if (!e.agg && e.calc) return "arithmetic order key in a grouped query";
    }
  }
  if (u.where) {
    for (const SkCond& c : u.where->conds) {
      if (c.lhs.agg) return "aggregate in WHERE";
      if (c.rhs == SkCond::Rhs::kNested) {
        if (nested) return "nesting deeper than one level";
        const SkUnit& n = *c.nested;
        if (n.select.size() != 1 || n.select[0].calc || n.group_columns > 0 || n.having ||
            !n.order.empty() || n.limit) {
          return "unsupported subquery shape";
        }
        if (c.lhs.calc) return "subquery compared with arithmetic";
        if (auto issue = StaticIssue(n, true)) return issue;
      }
    }
  }
  if (u.having) {
    for (const SkCond& c : u.having->conds) {
      if (c.rhs == SkCond::Rhs::kNested || c.rhs == SkCond::Rhs::kColumn) {
        return "unsupported HAVING operand";
      }
      if (!c.lhs.agg) return "plain HAVING condition";
    }
  }
  if (u.limit && u.order.empty()) return "LIMIT without ORDER BY";
  return std::nullopt;
}

bool SameShape(const SkUnit& a, const SkUnit& b) {
  if (a.select.size() != b.select.size()) return false;
  for (std::size_t i = 0; i < a.select.size(); ++i) {
    if (a.select[i].agg != b.select[i].agg || a.select[i].calc != b.select[i].calc) {
      return false;
    }
  }
  return true;
}

class Filler {
 public:
  Filler(const DatabaseContent& content, const FillConfig& cfg, Rng& rng)
      : content_(content), schema_(content.schema()), cfg_(cfg), rng_(rng) {}

  Query Fill(const Skeleton& sk) {
    if (schema_.tables.empty()) Incompatible("schema has no tables");
    Query q;
    Scope scope = NewScope(PickFocus());
    q.core = FillUnit(sk.left, scope, false);
    if (sk.set_op) {
      if (!SameShape(sk.left, sk.right)) Unfillable("set operation arms differ");
      const SkUnit& r = sk.right;
      if (r.group_columns > 0 || r.having || !r.order.empty() || r.limit) {
        Unfillable("unsupported set operation arm");
      }
      SelectCore right;
      right.select = q.core.select;
      right.from = q.core.from;
      right.joins = q.core.joins;
      if (r.where) {
        Scope rs;
        rs.focus = scope.focus;
        for (const std::string& t : q.core.from) rs.domain.push_back(*schema_.FindTable(t));
        right.where = FillPredicate(*r.where, rs, false);
      }
      q.set_op = SetOperation{*sk.set_op, std::move(right)};
    }
    return q;
  }

 private:
  struct Scope {
    int focus = 0;
    std::vector<int> domain;  // focus first, then FK neighbours
    std::set<int> used;
  };

  int PickFocus() {
    std::vector<int> tables;
    for (std::size_t t = 0; t < schema_.tables.size(); ++t) {
      if (!schema_.tables[t].columns.empty()) tables.push_back(static_cast<int>(t));
    }
    if (tables.empty()) Incompatible("schema has no columns");
    return rng_.Pick(tables);
  }

  Scope NewScope(int focus) const {
    Scope s;
    s.focus = focus;
    s.domain.push_back(focus);
    for (const ForeignKey& fk : schema_.foreign_keys) {
      int a = schema_.columns[fk.column].table;
      int b = schema_.columns[fk.referenced].table;
      int other = a == focus ? b : (b == focus ? a : -1);
      if (other >= 0 && std::find(s.domain.begin(), s.domain.end(), other) == s.domain.end()) {
        s.domain.push_back(other);
      }
    }
    return s;
  }

  bool HasValues(int column) const { return !content_.DistinctValues(column).empty(); }

  template <typename Pred>
  std::vector<int> ColumnsIn(int table, Pred pred) const {
    std::vector<int> out;
    for (int c : schema_.tables[table].columns) {
      if (pred(c)) out.push_back(c);
    }
    return out;
  }

  // Prefers the focus table; falls back to the other tables of the scope.
  template <typename Pred>
  std::optional<int> TryColumn(Scope& s, Pred pred) {
    std::vector<int> focus = ColumnsIn(s.focus, pred);
    std::vector<int> others;
    for (std::size_t i = 1; i < s.domain.size(); ++i) {
      for (int c : ColumnsIn(s.domain[i], pred)) others.push_back(c);
    }
    if (focus.empty() && others.empty()) return std::nullopt;
    int c = (!focus.empty() && (others.empty() || rng_.Chance(0.75))) ? rng_.Pick(focus)
                                                                       : rng_.Pick(others);
    s.used.insert(schema_.columns[c].table);
    return c;
  }

  template <typename Pred>
  int PickColumn(Scope& s, Pred pred, const std::string& what) {
    std::optional<int> c = TryColumn(s, pred);
    if (!c) Incompatible("no " + what + " column");
    return *c;
  }

  ColumnRef Ref(int column) const {
    const Column& c = schema_.columns[column];
    return {schema_.tables[c.table].name, c.name};
  }

  ColumnExpr CalcExpr(Scope& s) {
    // Two distinct number columns of one table.
    std::vector<int> tables;
    for (int t : s.domain) {
      if (ColumnsIn(t, [&](int c) { return schema_.columns[c].type == ColumnType::kNumber; })
              .size() >= 2) {
        tables.push_back(t);
      }
    }
    if (tables.empty()) Incompatible("no table with two number columns");
    int t = (std::find(tables.begin(), tables.end(), s.focus) != tables.end() &&
             rng_.Chance(0.75))
                ? s.focus
                : rng_.Pick(tables);
    std::vector<int> nums =
        ColumnsIn(t, [&](int c) { return schema_.columns[c].type == ColumnType::kNumber; });
    rng_.Shuffle(nums);
    s.used.insert(t);
    static const std::vector<ArithOp> kOps = {ArithOp::kAdd, ArithOp::kSub, ArithOp::kMul,
                                              ArithOp::kDiv};
    return ColumnExpr{Ref(nums[0]), rng_.Pick(kOps), Ref(nums[1])};
  }

  // Aggregate over a column compatible with the chosen function.
  AggExpr AggregateExpr(Scope& s, bool calc, bool allow_star) {
    std::vector<AggFunc> aggs = cfg_.aggregates;
    if (aggs.empty()) Incompatible("no aggregators configured");
    rng_.Shuffle(aggs);
    for (AggFunc agg : aggs) {
      if (calc) {
        if (agg == AggFunc::kCount) continue;
        return AggExpr{agg, false, CalcExpr(s)};
      }
      if (agg == AggFunc::kCount) {
        if (allow_star && rng_.Chance(0.5)) return AggExpr{agg, false, ColumnExpr::Star()};
        int c = PickColumn(s, [](int) { return true; }, "any");
        return AggExpr{agg, false, ColumnExpr::Column(Ref(c))};
      }
      bool sum_like = agg == AggFunc::kSum || agg == AggFunc::kAvg;
      std::optional<int> c = TryColumn(
          s,
          [&](int c) {
            ColumnType t = schema_.columns[c].type;
            return t == ColumnType::kNumber || (!sum_like && t == ColumnType::kTime);
          });
      if (c) return AggExpr{agg, false, ColumnExpr::Column(Ref(*c))};
    }
    Incompatible("no column compatible with the allowed aggregators");
  }

  Literal ToLiteral(const Value& v, ColumnType type) {
    if (const double* d = std::get_if<double>(&v)) {
      double x = *d;
      if (cfg_.allow_value_perturbation && type == ColumnType::kNumber && rng_.Chance(0.5)) {
        double step = std::max(1.0, std::round(std::fabs(x) * 0.1));
        x += rng_.Chance(0.5) ? step : -step;
      }
      return Literal::Number(x);
    }
    return Literal::Text(std::get<std::string>(v));
  }

  const Value& SampleValue(int column) {
    const std::vector<Value>& values = content_.DistinctValues(column);
    if (values.empty()) Unfillable("column has no values");
    return rng_.Pick(values);
  }

  Condition ValueCondition(int column, bool between) {
    const Column& col = schema_.columns[column];
    Condition c;
    c.lhs = AggExpr{AggFunc::kNone, false, ColumnExpr::Column(Ref(column))};
    if (between) {
      c.op = CompareOp::kBetween;
      Value a = SampleValue(column), b = SampleValue(column);
      if (CompareValues(b, a) < 0) std::swap(a, b);
      c.rhs = ToLiteral(a, col.type);
      c.upper = ToLiteral(b, col.type);
      return c;
    }
    c.op = rng_.Pick(OpsFor(col.type));
    Literal lit = ToLiteral(SampleValue(column), col.type);
    if (c.op == CompareOp::kLike) lit = Literal::Text("%" + lit.text() + "%");
    c.rhs = lit;
    return c;
  }

  Condition FillCondition(const SkCond& sk, Scope& s, bool nested) {
    auto with_values = [&](int c) { return HasValues(c); };
    if (sk.lhs.calc) {
      Condition c;
      c.lhs = AggExpr{AggFunc::kNone, false, CalcExpr(s)};
      std::optional<int> left = schema_.FindColumn(c.lhs.expr.left.table, c.lhs.expr.left.column);
      switch (sk.rhs) {
        case SkCond::Rhs::kValue:
          c.op = rng_.Pick(kNumericOps);
          c.rhs = ToLiteral(SampleValue(*left), ColumnType::kNumber);
          return c;
        case SkCond::Rhs::kBetween: {
          Condition v = ValueCondition(*left, true);
          c.op = v.op;
          c.rhs = v.rhs;
          c.upper = v.upper;
          return c;
        }
        case SkCond::Rhs::kColumn:
          c.op = rng_.Pick(kNumericOps);
          if (sk.rhs_calc) {
            c.rhs = CalcExpr(s);
          } else {
            int r = PickColumn(s, [&](int x) { return schema_.columns[x].type == ColumnType::kNumber; },
                               "number");
            c.rhs = ColumnExpr::Column(Ref(r));
          }
          return c;
        case SkCond::Rhs::kNested:
          break;
      }
      Unfillable("subquery compared with arithmetic");
    }
    switch (sk.rhs) {
      case SkCond::Rhs::kValue:
        return ValueCondition(PickColumn(s, with_values, "non-empty"), false);
      case SkCond::Rhs::kBetween:
        return ValueCondition(
            PickColumn(
                s,
                [&](int c) {
                  ColumnType t = schema_.columns[c].type;
                  return (t == ColumnType::kNumber || t == ColumnType::kTime) && HasValues(c);
                },
                "orderable"),
            true);
      case SkCond::Rhs::kColumn: {
        int l = PickColumn(s, [](int) { return true; }, "any");
        bool numeric = IsNumeric(schema_.columns[l].type);
        Condition c;
        c.lhs = AggExpr{AggFunc::kNone, false, ColumnExpr::Column(Ref(l))};
        if (sk.rhs_calc) {
          if (!numeric) Unfillable("arithmetic compared with text");
          c.rhs = CalcExpr(s);
          c.op = rng_.Pick(kNumericOps);
          return c;
        }
        std::optional<int> r = TryColumn(
            s, [&](int x) { return x != l && IsNumeric(schema_.columns[x].type) == numeric; });
        if (!r) Unfillable("no comparable column");
        c.rhs = ColumnExpr::Column(Ref(*r));
        c.op = numeric ? rng_.Pick(kNumericOps)
                       : (rng_.Chance(0.5) ? CompareOp::kEq : CompareOp::kNe);
        return c;
      }
      case SkCond::Rhs::kNested:
        if (nested) Unfillable("nesting deeper than one level");
        return NestedCondition(*sk.nested, s);
    }
    Unfillable("unknown condition");
  }

  Condition NestedCondition(const SkUnit& inner, Scope& s) {
    Condition c;
    int outer = -1;
    int inner_col = -1;
    if (inner.select[0].agg) {
      // Scalar subquery: aggregate over the compared column.
      outer = PickColumn(s, [&](int x) { return schema_.columns[x].type == ColumnType::kNumber; },
                         "number");
      inner_col = outer;
      std::vector<AggFunc> aggs;
      for (AggFunc a : cfg_.aggregates) {
        if (a == AggFunc::kMax || a == AggFunc::kMin || a == AggFunc::kAvg) aggs.push_back(a);
      }
      if (aggs.empty()) {
        for (AggFunc a : cfg_.aggregates) {
          if (a != AggFunc::kCount) aggs.push_back(a);
        }
      }
      if (aggs.empty()) Incompatible("no aggregator usable in a scalar subquery");
      c.op = rng_.Pick(kNumericOps);
      Query sub;
      sub.core.select.push_back(
          AggExpr{rng_.Pick(aggs), false, ColumnExpr::Column(Ref(inner_col))});
      sub.core.from.push_back(schema_.tables[schema_.columns[inner_col].table].name);
      FillSubFilter(inner, sub.core, schema_.columns[inner_col].table);
      c.lhs = AggExpr{AggFunc::kNone, false, ColumnExpr::Column(Ref(outer))};
      c.rhs = Box<Query>(std::move(sub));
      return c;
    }
    // IN subquery: follow a foreign key out of the scope when one exists.
    std::vector<std::pair<int, int>> links;
    for (const ForeignKey& fk : schema_.foreign_keys) {
      for (auto [a, b] : {std::pair{fk.column, fk.referenced}, std::pair{fk.referenced, fk.column}}) {
        int t = schema_.columns[a].table;
        if (std::find(s.domain.begin(), s.domain.end(), t) != s.domain.end()) {
          links.emplace_back(a, b);
        }
      }
    }
    if (!links.empty() && rng_.Chance(0.8)) {
      std::tie(outer, inner_col) = rng_.Pick(links);
      s.used.insert(schema_.columns[outer].table);
    } else {
      outer = PickColumn(s, [](int) { return true; }, "any");
      inner_col = outer;
    }
    c.op = rng_.Chance(0.5) ? CompareOp::kIn : CompareOp::kNotIn;
    Query sub;
    sub.core.select.push_back(AggExpr{AggFunc::kNone, false, ColumnExpr::Column(Ref(inner_col))});
    sub.core.from.push_back(schema_.tables[schema_.columns[inner_col].table].name);
    FillSubFilter(inner, sub.core, schema_.columns[inner_col].table);
    c.lhs = AggExpr{AggFunc::kNone, false, ColumnExpr::Column(Ref(outer))};
    c.rhs = Box<Query>(std::move(sub));
    return c;
  }

  void FillSubFilter(const SkUnit& inner, SelectCore& core, int table) {
    if (!inner.where) return;
    Scope s;
    s.focus = table;
    s.domain = {table};
    core.where = FillPredicate(*inner.where, s, true);
  }

  Predicate FillPredicate(const SkPredicate& sk, Scope& s, bool nested) {
    std::vector<Condition> conds;
    for (const SkCond& c : sk.conds) conds.push_back(FillCondition(c, s, nested));
    return BuildPredicate(std::move(conds), sk.connectives);
  }

  std::vector<int> PickGroupColumns(Scope& s, int n) {
    const std::vector<int>& cols = schema_.tables[s.focus].columns;
    auto pool = [&](auto pred) {
      std::vector<int> out;
      for (int c : cols) {
        if (pred(c)) out.push_back(c);
      }
      return out;
    };
    std::vector<int> candidates = pool([&](int c) {
      return !schema_.IsPrimaryKey(c) && schema_.columns[c].type == ColumnType::kText;
    });
    if (static_cast<int>(candidates.size()) < n) {
      candidates = pool([&](int c) { return !schema_.IsPrimaryKey(c); });
    }
    if (static_cast<int>(candidates.size()) < n) candidates = cols;
    if (static_cast<int>(candidates.size()) < n) Incompatible("not enough group columns");
    rng_.Shuffle(candidates);
    candidates.resize(n);
    s.used.insert(s.focus);
    return candidates;
  }

  SelectCore FillUnit(const SkUnit& u, Scope& s, bool nested) {
    SelectCore core;
    std::vector<int> group = PickGroupColumns(s, u.group_columns);
    for (int g : group) core.group_by.push_back(Ref(g));

    std::vector<int> plain_used;
    for (const SkExpr& e : u.select) {
      if (e.agg) {
        core.select.push_back(AggregateExpr(s, e.calc, true));
        continue;
      }
      if (e.calc) {
        core.select.push_back(AggExpr{AggFunc::kNone, false, CalcExpr(s)});
        continue;
      }
      int c;
      if (!group.empty()) {
        std::vector<int> left;
        for (int g : group) {
          if (std::find(plain_used.begin(), plain_used.end(), g) == plain_used.end()) {
            left.push_back(g);
          }
        }
        c = rng_.Pick(left.empty() ? group : left);
      } else {
        if (u.select.size() == 1 && !u.where && rng_.Chance(0.05)) {
          core.select.push_back(AggExpr{AggFunc::kNone, false, ColumnExpr::Star()});
          s.used.insert(s.focus);
          continue;
        }
        std::optional<int> picked = TryColumn(
            s,
            [&](int x) {
              return std::find(plain_used.begin(), plain_used.end(), x) == plain_used.end();
            });
        if (!picked) Incompatible("not enough columns for the select list");
        c = *picked;
      }
      plain_used.push_back(c);
      core.select.push_back(AggExpr{AggFunc::kNone, false, ColumnExpr::Column(Ref(c))});
    }

    if (u.where) core.where = FillPredicate(*u.where, s, nested);

    for (const SkExpr& e : u.order) {
      static const std::vector<SortDir> kDirs = {SortDir::kAsc, SortDir::kDesc};
      OrderItem item;
      if (e.agg) {
        item.key = AggregateExpr(s, e.calc, true);
      } else if (e.calc) {
        item.key = AggExpr{AggFunc::kNone, false, CalcExpr(s)};
      } else if (!group.empty()) {
        item.key = AggExpr{AggFunc::kNone, false, ColumnExpr::Column(Ref(rng_.Pick(group)))};
      } else {
        int c = PickColumn(s, [](int) { return true; }, "any");
        item.key = AggExpr{AggFunc::kNone, false, ColumnExpr::Column(Ref(c))};
      }
      item.dir = rng_.Pick(kDirs);
      core.order_by.push_back(std::move(item));
    }
    if (u.limit) core.limit = rng_.Chance(0.5) ? 1 : 2 + static_cast<std::int64_t>(rng_.Below(4));

    s.used.insert(s.focus);
    JoinPath path;
    try {
      path = FindJoinPath(schema_, s.used, s.focus);
    } catch (const Error& e) {
      Unfillable(e.what());
    }
    core.from = path.tables;
    core.joins = path.edges;

    if (u.having) core.having = FillHaving(*u.having, core);
    return core;
  }

  Predicate FillHaving(const SkPredicate& sk, const SelectCore& base) {
    std::vector<int> tables;
    for (const std::string& t : base.from) tables.push_back(*schema_.FindTable(t));
    Scope s;
    s.focus = tables[0];
    s.domain = tables;
    std::vector<Condition> conds;
    for (const SkCond& c : sk.conds) {
      Condition cond;
      cond.lhs = AggregateExpr(s, c.lhs.calc, true);
      // Sample the threshold from the aggregate values the groups really take.
      Query probe;
      probe.core = base;
      probe.core.select = {cond.lhs};
      probe.core.having.reset();
      probe.core.order_by.clear();
      probe.core.limit.reset();
      std::vector<Value> values;
      try {
        for (auto& row : Execute(probe, content_).rows) {
          if (!IsNull(row[0]) && std::find(values.begin(), values.end(), row[0]) == values.end()) {
            values.push_back(row[0]);
          }
        }
      } catch (const Error& e) {
        Unfillable(std::string("HAVING probe failed: ") + e.what());
      }
      if (values.empty()) Unfillable("no group values for HAVING");
      std::sort(values.begin(), values.end(),
                [](const Value& a, const Value& b) { return CompareValues(a, b) < 0; });
      if (c.rhs == SkCond::Rhs::kBetween) {
        Value a = rng_.Pick(values), b = rng_.Pick(values);
        if (CompareValues(b, a) < 0) std::swap(a, b);
        cond.op = CompareOp::kBetween;
        cond.rhs = ToLiteral(a, ColumnType::kNumber);
        cond.upper = ToLiteral(b, ColumnType::kNumber);
      } else {
        cond.op = rng_.Pick(kNumericOps);
        cond.rhs = ToLiteral(rng_.Pick(values), ColumnType::kNumber);
      }
      conds.push_back(std::move(cond));
    }
    return BuildPredicate(std::move(conds), sk.connectives);
  }

  const DatabaseContent& content_;
  const Schema& schema_;
  const FillConfig& cfg_;
  Rng& rng_;
};

}  // namespace

std::vector<FilledQuery> FillPattern(const Pattern& pattern, int sketch_id,
                                     const DatabaseContent& content, const FillConfig& cfg,
                                     FillReport* report) {
  if (cfg.max_fills_per_sketch_per_db < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_fills_per_sketch_per_db must be >= 1");
  }
  FillReport local;
  FillReport& rep = report ? *report : local;
  std::vector<FilledQuery> out;
  Skeleton sk = ParseSkeleton(pattern);
  std::optional<std::string> issue = StaticIssue(sk.left, false);
  if (!issue && sk.set_op) issue = StaticIssue(sk.right, false);
  if (issue) {
    ++rep.failures[*issue];
    return out;
  }
  const Schema& schema = content.schema();
  const std::uint64_t db_hash = Fnv1a64(schema.db_id);
  std::set<std::string> seen;
  bool all_incompatible = true;
  const int budget = cfg.max_fills_per_sketch_per_db * std::max(1, cfg.attempts_per_fill);
  for (int attempt = 0; attempt < budget; ++attempt) {
    if (static_cast<int>(out.size()) >= cfg.max_fills_per_sketch_per_db) break;
    std::uint64_t seed = DeriveSeed(cfg.rng_seed, {db_hash, static_cast<std::uint64_t>(sketch_id),
                                                   static_cast<std::uint64_t>(attempt)});
    Rng rng(seed);
    ++rep.attempts;
    try {
      Query q = Filler(content, cfg, rng).Fill(sk);
      ValidateSemantics(q, schema);
      if (ExtractPattern(q) != pattern) throw FillFailure{"pattern mismatch", false};
      all_incompatible = false;
      std::string sql = SerializeSql(q);
      if (!seen.insert(sql).second) {
        ++rep.duplicates;
        continue;
      }
      out.push_back({std::move(q), std::move(sql), sketch_id, seed});
    } catch (const FillFailure& f) {
      if (!f.incompatible) all_incompatible = false;
      ++rep.failures[f.reason];
    } catch (const Error& e) {
      all_incompatible = false;
      ++rep.failures[std::string(ErrorCodeName(e.code()))];
    }
  }
  if (out.empty() && all_incompatible && rep.attempts > 0) rep.no_compatible_columns = true;
  return out;
}

std::vector<Query> FillSketch(const SketchTree& sketch, const Schema& schema,
                              const DatabaseContent& content, const FillConfig& cfg,
                              FillReport* report) {
  if (schema.db_id != content.schema().db_id) {
    throw Error(ErrorCode::kInvalidArgument, "content does not belong to " + schema.db_id);
  }
  std::vector<Query> out;
  for (FilledQuery& f : FillPattern(sketch.Flatten(), 0, content, cfg, report)) {
    out.push_back(std::move(f.ast));
  }
  return out;
}

std::vector<std::size_t> ExecutableIndices(const std::vector<const Query*>& queries,
                                           const DatabaseContent& content,
                                           std::vector<ExecDiagnostic>* diagnostics) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    try {
      Execute(*queries[i], content);
      keep.push_back(i);
    } catch (const Error& e) {
      if (diagnostics) diagnostics->push_back({i, e.code(), e.message()});
    }
  }
  return keep;
}

std::vector<Query> FilterExecutable(const std::vector<Query>& queries,
                                    const DatabaseContent& content,
                                    std::vector<ExecDiagnostic>* diagnostics) {
  std::vector<const Query*> ptrs;
  for (const Query& q : queries) ptrs.push_back(&q);
  std::vector<Query> out;
  for (std::size_t i : ExecutableIndices(ptrs, content, diagnostics)) out.push_back(queries[i]);
  return out;
}

}  // namespace sqlaug
