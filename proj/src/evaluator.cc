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

#include "sqlaug/evaluator.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "sqlaug/error.h"
#include "sqlaug/execution_order.h"
#include "sqlaug/sql_writer.h"

namespace sqlaug {

int CompareValues(const Value& a, const Value& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (const double* x = std::get_if<double>(&a)) {
    double y = std::get<double>(b);
    return *x < y ? -1 : (*x > y ? 1 : 0);
  }
  if (const std::string* x = std::get_if<std::string>(&a)) {
    int c = x->compare(std::get<std::string>(b));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  return 0;
}

std::string ResultTable::ToTsv() const {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += '\t';
    out += labels[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      out += IsNull(row[i]) ? "NULL" : ValueToString(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

enum class Kind { kNumeric, kText };

Kind KindOf(ColumnType t) {
  return (t == ColumnType::kNumber || t == ColumnType::kBoolean) ? Kind::kNumeric
                                                                 : Kind::kText;
}

const char* KindName(Kind k) { return k == Kind::kNumeric ? "number" : "text"; }

struct CExpr {
  bool star = false;
  int left = -1;
  std::optional<ArithOp> op;
  int right = -1;
  Kind kind = Kind::kNumeric;
};

struct CAgg {
  AggFunc agg = AggFunc::kNone;
  bool distinct = false;
  CExpr expr;
  Kind kind = Kind::kNumeric;
};

enum class RhsKind { kLiteral, kColumn, kScalar, kSet };

struct CCond {
  CAgg lhs;
  CompareOp op = CompareOp::kEq;
  RhsKind rhs_kind = RhsKind::kLiteral;
  Value literal;
  Value upper;
  CExpr column;
  std::vector<Value> set;
};

struct CPred {
  std::optional<CCond> leaf;
  Connective op = Connective::kAnd;
  std::vector<CPred> children;
};

struct Source {
  std::vector<int> tables;   // schema table index per FROM entry
  std::vector<int> offsets;  // first cell of each FROM entry in a joined row
  int width = 0;
};

using Row = std::vector<Value>;

struct CoreResult {
  ResultTable table;
  std::vector<Kind> kinds;
};

bool LikeMatch(std::string_view s, std::string_view p) {
  auto lower = [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  };
  std::size_t si = 0, pi = 0, star_p = std::string_view::npos, star_s = 0;
  while (si < s.size()) {
    if (pi < p.size() && (p[pi] == '_' || (p[pi] != '%' && lower(p[pi]) == lower(s[si])))) {
      ++si;
      ++pi;
    } else if (pi < p.size() && p[pi] == '%') {
      star_p = pi++;
      star_s = si;
    } else if (star_p != std::string_view::npos) {
      pi = star_p + 1;
      si = ++star_s;
    } else {
      return false;
    }
  }
  while (pi < p.size() && p[pi] == '%') ++pi;
  return pi == p.size();
}

// nullopt when either side is null.
std::optional<int> Compare(const Value& a, const Value& b) {
  if (IsNull(a) || IsNull(b)) return std::nullopt;
  if (a.index() != b.index()) {
    throw Error(ErrorCode::kTypeError, "cannot compare '" + ValueToString(a) + "' with '" +
                                           ValueToString(b) + "'");
  }
  return CompareValues(a, b);
}

Value FromLiteral(const Literal& l) {
  if (l.is_number()) return Value{l.number()};
  return Value{l.text()};
}

class Engine {
 public:
  Engine(const Schema& schema, const DatabaseContent* content)
      : schema_(schema), content_(content) {}

  CoreResult Run(const Query& q) {
    CoreResult left = RunCore(q.core);
    if (!q.set_op) return left;
    CoreResult right = RunCore(q.set_op->right);
    if (left.kinds.size() != right.kinds.size()) {
      throw Error(ErrorCode::kInvalidQuery, "set operation over " +
                                                std::to_string(left.kinds.size()) + " and " +
                                                std::to_string(right.kinds.size()) +
                                                " columns");
    }
    for (std::size_t i = 0; i < left.kinds.size(); ++i) {
      if (left.kinds[i] != right.kinds[i]) {
        throw Error(ErrorCode::kTypeError, "set operation mixes column types");
      }
    }
    if (!content_) return left;
    std::vector<Row> rows;
    auto contains = [](const std::vector<Row>& rs, const Row& r) {
      return std::find(rs.begin(), rs.end(), r) != rs.end();
    };
    const std::vector<Row>& a = left.table.rows;
    const std::vector<Row>& b = right.table.rows;
    switch (q.set_op->kind) {
      case SetOpKind::kUnion:
        for (const Row& r : a) {
          if (!contains(rows, r)) rows.push_back(r);
        }
        for (const Row& r : b) {
          if (!contains(rows, r)) rows.push_back(r);
        }
        break;
      case SetOpKind::kIntersect:
        for (const Row& r : a) {
          if (contains(b, r) && !contains(rows, r)) rows.push_back(r);
        }
        break;
      case SetOpKind::kExcept:
        for (const Row& r : a) {
          if (!contains(b, r) && !contains(rows, r)) rows.push_back(r);
        }
        break;
    }
    left.table.rows = std::move(rows);
    return left;
  }

 private:
  Source BuildSource(const SelectCore& core) {
    if (core.from.empty()) throw Error(ErrorCode::kInvalidQuery, "query has no FROM table");
    Source src;
    for (const std::string& name : core.from) {
      std::optional<int> t = schema_.FindTable(name);
      if (!t) {
        std::vector<std::string> names;
        for (const Table& table : schema_.tables) names.push_back(table.name);
        throw UnknownIdentifierError(name, names);
      }
      if (std::find(src.tables.begin(), src.tables.end(), *t) != src.tables.end()) {
        throw Error(ErrorCode::kInvalidQuery, "table '" + name + "' appears twice in FROM");
      }
      src.tables.push_back(*t);
      src.offsets.push_back(src.width);
      src.width += static_cast<int>(schema_.tables[*t].columns.size());
    }
    return src;
  }

  int FromIndex(const Source& src, std::string_view table) const {
    for (std::size_t i = 0; i < src.tables.size(); ++i) {
      if (EqualsIgnoreCase(schema_.tables[src.tables[i]].name, table)) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  // Offset of a column in the joined row; sets *type.
  int Resolve(const Source& src, const ColumnRef& ref, ColumnType* type) const {
    std::vector<std::string> candidates;
    auto candidate_list = [&] {
      for (int t : src.tables) {
        for (int c : schema_.tables[t].columns) {
          candidates.push_back(schema_.tables[t].name + "." + schema_.columns[c].name);
        }
      }
      return candidates;
    };
    auto in_table = [&](int from_index) -> int {
      const Table& t = schema_.tables[src.tables[from_index]];
      for (std::size_t k = 0; k < t.columns.size(); ++k) {
        if (EqualsIgnoreCase(schema_.columns[t.columns[k]].name, ref.column)) {
          *type = schema_.columns[t.columns[k]].type;
          return src.offsets[from_index] + static_cast<int>(k);
        }
      }
      return -1;
    };
    if (!ref.table.empty()) {
      int f = FromIndex(src, ref.table);
      int off = f < 0 ? -1 : in_table(f);
      if (off < 0) throw UnknownIdentifierError(ref.table + "." + ref.column, candidate_list());
      return off;
    }
    int found = -1;
    for (std::size_t f = 0; f < src.tables.size(); ++f) {
      int off = in_table(static_cast<int>(f));
      if (off < 0) continue;
      if (found >= 0) {
        throw Error(ErrorCode::kInvalidQuery, "ambiguous column '" + ref.column + "'");
      }
      found = off;
    }
    if (found < 0) throw UnknownIdentifierError(ref.column, candidate_list());
    return found;
  }

  CExpr CompileExpr(const Source& src, const ColumnExpr& e) const {
    CExpr out;
    if (e.left.is_star()) {
      if (e.op) throw Error(ErrorCode::kInvalidQuery, "arithmetic over *");
      out.star = true;
      return out;
    }
    ColumnType lt = ColumnType::kText;
    out.left = Resolve(src, e.left, &lt);
    out.kind = KindOf(lt);
    if (e.op) {
      ColumnType rt = ColumnType::kText;
      out.op = e.op;
      out.right = Resolve(src, e.right, &rt);
      if (KindOf(lt) != Kind::kNumeric || KindOf(rt) != Kind::kNumeric) {
        throw Error(ErrorCode::kTypeError, "arithmetic on non-number columns");
      }
      out.kind = Kind::kNumeric;
    }
    return out;
  }

  CAgg CompileAgg(const Source& src, const AggExpr& e) const {
    CAgg out;
    out.agg = e.agg;
    out.distinct = e.distinct;
    out.expr = CompileExpr(src, e.expr);
    out.kind = out.expr.kind;
    switch (e.agg) {
      case AggFunc::kNone:
        break;
      case AggFunc::kCount:
        out.kind = Kind::kNumeric;
        break;
      case AggFunc::kSum:
      case AggFunc::kAvg:
        if (out.expr.star || out.expr.kind != Kind::kNumeric) {
          throw Error(ErrorCode::kTypeError,
                      std::string(AggName(e.agg)) + " requires a number column");
        }
        break;
      case AggFunc::kMax:
      case AggFunc::kMin:
        if (out.expr.star) {
          throw Error(ErrorCode::kInvalidQuery, std::string(AggName(e.agg)) + "(*)");
        }
        break;
    }
    return out;
  }

  std::vector<Value> SubqueryColumn(const Query& q, Kind* kind) {
    CoreResult r = Run(q);
    if (r.kinds.size() != 1) {
      throw Error(ErrorCode::kInvalidQuery, "subquery must return exactly one column");
    }
    *kind = r.kinds[0];
    std::vector<Value> values;
    for (Row& row : r.table.rows) values.push_back(std::move(row[0]));
    return values;
  }

  CCond CompileCond(const Source& src, const Condition& c, bool allow_agg) {
    CCond out;
    out.lhs = CompileAgg(src, c.lhs);
    out.op = c.op;
    if (out.lhs.agg != AggFunc::kNone && !allow_agg) {
      throw Error(ErrorCode::kInvalidQuery, "aggregate in WHERE");
    }
    if (out.lhs.expr.star && out.lhs.agg != AggFunc::kCount) {
      throw Error(ErrorCode::kInvalidQuery, "* in a condition");
    }
    Kind lk = out.lhs.kind;
    Kind rk = lk;
    if (const Literal* lit = std::get_if<Literal>(&c.rhs)) {
      out.rhs_kind = RhsKind::kLiteral;
      out.literal = FromLiteral(*lit);
      rk = lit->is_number() ? Kind::kNumeric : Kind::kText;
    } else if (const ColumnExpr* col = std::get_if<ColumnExpr>(&c.rhs)) {
      out.rhs_kind = RhsKind::kColumn;
      out.column = CompileExpr(src, *col);
      if (out.column.star) throw Error(ErrorCode::kInvalidQuery, "* in a condition");
      rk = out.column.kind;
    } else {
      const Query& sub = *std::get<Box<Query>>(c.rhs);
      bool is_set = c.op == CompareOp::kIn || c.op == CompareOp::kNotIn;
      out.rhs_kind = is_set ? RhsKind::kSet : RhsKind::kScalar;
      out.set = SubqueryColumn(sub, &rk);
      if (!is_set && content_ && out.set.size() > 1) {
        throw Error(ErrorCode::kInvalidQuery, "scalar subquery returned " +
                                                  std::to_string(out.set.size()) + " rows");
      }
    }
    if ((c.op == CompareOp::kIn || c.op == CompareOp::kNotIn) &&
        out.rhs_kind != RhsKind::kSet) {
      throw Error(ErrorCode::kInvalidQuery, "IN requires a subquery");
    }
    if (c.op == CompareOp::kLike) {
      if (lk != Kind::kText || rk != Kind::kText) {
        throw Error(ErrorCode::kTypeError, "LIKE requires text operands");
      }
    } else if (lk != rk) {
      throw Error(ErrorCode::kTypeError, std::string("cannot compare ") + KindName(lk) +
                                             " with " + KindName(rk));
    }
    if (c.op == CompareOp::kBetween) {
      if (!c.upper || out.rhs_kind != RhsKind::kLiteral) {
        throw Error(ErrorCode::kInvalidQuery, "BETWEEN requires two literal bounds");
      }
      out.upper = FromLiteral(*c.upper);
      if ((c.upper->is_number() ? Kind::kNumeric : Kind::kText) != lk) {
        throw Error(ErrorCode::kTypeError, "BETWEEN bound type mismatch");
      }
    }
    return out;
  }

  CPred CompilePred(const Source& src, const Predicate& p, bool allow_agg) {
    CPred out;
    out.op = p.op;
    if (p.is_leaf()) {
      out.leaf = CompileCond(src, *p.leaf, allow_agg);
      return out;
    }
    for (const Predicate& c : p.children) out.children.push_back(CompilePred(src, c, allow_agg));
    return out;
  }

  static Value EvalExpr(const CExpr& e, const Row& row) {
    Value a = row[e.left];
    if (!e.op) return a;
    const Value& b = row[e.right];
    if (IsNull(a) || IsNull(b)) return Value{};
    const double* x = std::get_if<double>(&a);
    const double* y = std::get_if<double>(&b);
    if (!x || !y) throw Error(ErrorCode::kTypeError, "arithmetic on non-number values");
    switch (*e.op) {
      case ArithOp::kAdd: return Value{*x + *y};
      case ArithOp::kSub: return Value{*x - *y};
      case ArithOp::kMul: return Value{*x * *y};
      case ArithOp::kDiv:
        if (*y == 0) throw Error(ErrorCode::kDivideByZero, "division by zero");
        return Value{*x / *y};
    }
    return Value{};
  }

  // Aggregates over the rows of one group; plain expressions read the first row.
  static Value EvalAgg(const CAgg& a, const std::vector<Row>& rows,
                       const std::vector<int>& group) {
    if (a.agg == AggFunc::kNone) {
      if (group.empty()) return Value{};
      return EvalExpr(a.expr, rows[group.front()]);
    }
    if (a.agg == AggFunc::kCount && a.expr.star) {
      return Value{static_cast<double>(group.size())};
    }
    std::vector<Value> values;
    for (int r : group) {
      Value v = EvalExpr(a.expr, rows[r]);
      if (IsNull(v)) continue;
      if (a.distinct && std::find(values.begin(), values.end(), v) != values.end()) continue;
      values.push_back(std::move(v));
    }
    switch (a.agg) {
      case AggFunc::kCount:
        return Value{static_cast<double>(values.size())};
      case AggFunc::kSum:
      case AggFunc::kAvg: {
        if (values.empty()) return Value{};
        double sum = 0;
        for (const Value& v : values) {
          const double* d = std::get_if<double>(&v);
          if (!d) throw Error(ErrorCode::kTypeError, "sum over text values");
          sum += *d;
        }
        if (a.agg == AggFunc::kSum) return Value{sum};
        return Value{sum / static_cast<double>(values.size())};
      }
      case AggFunc::kMax:
      case AggFunc::kMin: {
        if (values.empty()) return Value{};
        Value best = values[0];
        for (std::size_t i = 1; i < values.size(); ++i) {
          int c = *Compare(values[i], best);
          if ((a.agg == AggFunc::kMax && c > 0) || (a.agg == AggFunc::kMin && c < 0)) {
            best = values[i];
          }
        }
        return best;
      }
      case AggFunc::kNone:
        break;
    }
    return Value{};
  }

  static bool EvalCond(const CCond& c, const std::vector<Row>& rows,
                       const std::vector<int>& group) {
    Value lhs = EvalAgg(c.lhs, rows, group);
    switch (c.rhs_kind) {
      case RhsKind::kSet: {
        if (IsNull(lhs)) return false;
        bool saw_null = false;
        for (const Value& v : c.set) {
          if (IsNull(v)) {
            saw_null = true;
            continue;
          }
          if (*Compare(lhs, v) == 0) return c.op == CompareOp::kIn;
        }
        return c.op == CompareOp::kNotIn && !saw_null;
      }
      case RhsKind::kScalar:
      case RhsKind::kLiteral:
      case RhsKind::kColumn:
        break;
    }
    Value rhs;
    if (c.rhs_kind == RhsKind::kLiteral) {
      rhs = c.literal;
    } else if (c.rhs_kind == RhsKind::kScalar) {
      rhs = c.set.empty() ? Value{} : c.set[0];
    } else {
      rhs = group.empty() ? Value{} : EvalExpr(c.column, rows[group.front()]);
    }
    if (c.op == CompareOp::kLike) {
      if (IsNull(lhs) || IsNull(rhs)) return false;
      return LikeMatch(ValueToString(lhs), ValueToString(rhs));
    }
    std::optional<int> cmp = Compare(lhs, rhs);
    if (!cmp) return false;
    switch (c.op) {
      case CompareOp::kEq: return *cmp == 0;
      case CompareOp::kNe: return *cmp != 0;
      case CompareOp::kGt: return *cmp > 0;
      case CompareOp::kGe: return *cmp >= 0;
      case CompareOp::kLt: return *cmp < 0;
      case CompareOp::kLe: return *cmp <= 0;
      case CompareOp::kBetween: {
        std::optional<int> hi = Compare(lhs, c.upper);
        return hi && *cmp >= 0 && *hi <= 0;
      }
      case CompareOp::kLike:
      case CompareOp::kIn:
      case CompareOp::kNotIn:
        break;
    }
    return false;
  }

  static bool EvalPred(const CPred& p, const std::vector<Row>& rows,
                       const std::vector<int>& group) {
    if (p.leaf) return EvalCond(*p.leaf, rows, group);
    if (p.op == Connective::kAnd) {
      for (const CPred& c : p.children) {
        if (!EvalPred(c, rows, group)) return false;
      }
      return true;
    }
    for (const CPred& c : p.children) {
      if (EvalPred(c, rows, group)) return true;
    }
    return false;
  }

  std::vector<Row> Join(const Source& src, const SelectCore& core) const {
    struct Link {
      int new_cell;   // column position within the table being joined
      int old_cell;   // offset in the partial row
    };
    std::vector<Row> rows;
    for (const Row& r : content_->table(src.tables[0]).rows) rows.push_back(r);
    for (std::size_t i = 1; i < src.tables.size(); ++i) {
      const Table& t = schema_.tables[src.tables[i]];
      std::vector<Link> links;
      for (const JoinEdge& e : core.joins) {
        int lf = FromIndex(src, e.left_table);
        int rf = FromIndex(src, e.right_table);
        if (lf < 0 || rf < 0) {
          throw UnknownIdentifierError(lf < 0 ? e.left_table : e.right_table, core.from);
        }
        const std::string* new_col = nullptr;
        int old_from = -1;
        std::string old_col;
        if (lf == static_cast<int>(i) && rf < lf) {
          new_col = &e.left_column;
          old_from = rf;
          old_col = e.right_column;
        } else if (rf == static_cast<int>(i) && lf < rf) {
          new_col = &e.right_column;
          old_from = lf;
          old_col = e.left_column;
        } else {
          continue;
        }
        std::optional<int> nc = schema_.FindColumn(src.tables[i], *new_col);
        std::optional<int> oc = schema_.FindColumn(src.tables[old_from], old_col);
        if (!nc || !oc) throw UnknownIdentifierError(nc ? old_col : *new_col, {});
        const auto& ncols = t.columns;
        const auto& ocols = schema_.tables[src.tables[old_from]].columns;
        links.push_back(
            {static_cast<int>(std::find(ncols.begin(), ncols.end(), *nc) - ncols.begin()),
             src.offsets[old_from] +
                 static_cast<int>(std::find(ocols.begin(), ocols.end(), *oc) - ocols.begin())});
      }
      const std::vector<Row>& right = content_->table(src.tables[i]).rows;
      std::vector<Row> next;
      for (const Row& left : rows) {
        for (const Row& r : right) {
          bool ok = true;
          for (const Link& l : links) {
            std::optional<int> c = Compare(left[l.old_cell], r[l.new_cell]);
            if (!c || *c != 0) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          Row joined = left;
          joined.insert(joined.end(), r.begin(), r.end());
          next.push_back(std::move(joined));
        }
      }
      rows = std::move(next);
    }
    return rows;
  }

  CoreResult RunCore(const SelectCore& core) {
    Source src = BuildSource(core);
    std::optional<CPred> where;
    if (core.where) where = CompilePred(src, *core.where, false);
    std::vector<CExpr> group_keys;
    std::set<int> grouped;
    for (const ColumnRef& g : core.group_by) {
      CExpr e = CompileExpr(src, ColumnExpr::Column(g));
      if (e.star) throw Error(ErrorCode::kInvalidQuery, "GROUP BY *");
      grouped.insert(e.left);
      group_keys.push_back(e);
    }
    const bool aggregate = !core.group_by.empty() || core.has_aggregate();
    std::optional<CPred> having;
    if (core.having) having = CompilePred(src, *core.having, true);

    CoreResult result;
    std::vector<CAgg> items;
    for (const SelectItem& item : core.select) {
      if (item.expr.left.is_star() && !item.is_aggregate()) {
        if (aggregate) throw Error(ErrorCode::kInvalidQuery, "* in an aggregate query");
        for (std::size_t f = 0; f < src.tables.size(); ++f) {
          const Table& t = schema_.tables[src.tables[f]];
          for (std::size_t k = 0; k < t.columns.size(); ++k) {
            CAgg a;
            a.expr.left = src.offsets[f] + static_cast<int>(k);
            a.expr.kind = KindOf(schema_.columns[t.columns[k]].type);
            a.kind = a.expr.kind;
            items.push_back(a);
            result.table.labels.push_back(schema_.columns[t.columns[k]].name);
          }
        }
        continue;
      }
      items.push_back(CompileAgg(src, item));
      result.table.labels.push_back(RenderAggExpr(item, false));
    }
    std::vector<CAgg> order_keys;
    for (const OrderItem& o : core.order_by) {
      order_keys.push_back(CompileAgg(src, o.key));
      if (order_keys.back().expr.star && o.key.agg != AggFunc::kCount) {
        throw Error(ErrorCode::kInvalidQuery, "ORDER BY *");
      }
    }
    if (aggregate) {
      auto check = [&](const CAgg& a) {
        if (a.agg != AggFunc::kNone) return;
        bool ok = grouped.count(a.expr.left) && (!a.expr.op || grouped.count(a.expr.right));
        if (!ok) {
          throw Error(ErrorCode::kInvalidQuery,
                      "column is neither grouped nor aggregated");
        }
      };
      for (const CAgg& a : items) check(a);
      for (const CAgg& a : order_keys) check(a);
      if (having) {
        std::vector<const CPred*> stack{&*having};
        while (!stack.empty()) {
          const CPred* p = stack.back();
          stack.pop_back();
          if (p->leaf) {
            check(p->leaf->lhs);
            if (p->leaf->rhs_kind == RhsKind::kColumn) {
              check(CAgg{AggFunc::kNone, false, p->leaf->column, p->leaf->column.kind});
            }
          }
          for (const CPred& c : p->children) stack.push_back(&c);
        }
      }
    }
    for (const CAgg& a : items) result.kinds.push_back(a.kind);
    // Disambiguate repeated labels: x, x_1, x_2, ...
    std::map<std::string, int> seen;
    for (std::string& label : result.table.labels) {
      int n = seen[label]++;
      if (n > 0) label += "_" + std::to_string(n);
    }
    if (!content_) return result;

    std::vector<Row> rows = Join(src, core);
    std::vector<int> live(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) live[i] = static_cast<int>(i);
    std::vector<std::vector<int>> groups;
    struct OutRow {
      Row values;
      Row keys;
    };
    std::vector<OutRow> out;

    for (Section stage : kExecutionOrder) {
      switch (stage) {
        case Section::kWhere:
          if (where) {
            std::vector<int> kept;
            for (int r : live) {
              if (EvalPred(*where, rows, {r})) kept.push_back(r);
            }
            live = std::move(kept);
          }
          break;
        case Section::kGroupBy:
          if (!aggregate) {
            for (int r : live) groups.push_back({r});
          } else if (group_keys.empty()) {
            groups.push_back(live);
          } else {
            std::map<Row, std::vector<int>, bool (*)(const Row&, const Row&)> by_key(
                [](const Row& a, const Row& b) {
                  return std::lexicographical_compare(
                      a.begin(), a.end(), b.begin(), b.end(),
                      [](const Value& x, const Value& y) { return CompareValues(x, y) < 0; });
                });
            for (int r : live) {
              Row key;
              for (const CExpr& g : group_keys) key.push_back(EvalExpr(g, rows[r]));
              by_key[key].push_back(r);
            }
            for (auto& [key, members] : by_key) groups.push_back(std::move(members));
          }
          break;
        case Section::kHaving:
          if (having) {
            std::vector<std::vector<int>> kept;
            for (auto& g : groups) {
              if (EvalPred(*having, rows, g)) kept.push_back(std::move(g));
            }
            groups = std::move(kept);
          }
          break;
        case Section::kSelect:
          for (const auto& g : groups) {
            OutRow o;
            for (const CAgg& a : items) o.values.push_back(EvalAgg(a, rows, g));
            for (const CAgg& a : order_keys) o.keys.push_back(EvalAgg(a, rows, g));
            if (core.distinct) {
              bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const OutRow& x) { return x.values == o.values; });
              if (dup) continue;
            }
            out.push_back(std::move(o));
          }
          break;
        case Section::kOrderBy:
          if (!core.order_by.empty()) {
            std::stable_sort(out.begin(), out.end(), [&](const OutRow& a, const OutRow& b) {
              for (std::size_t k = 0; k < core.order_by.size(); ++k) {
                int c = CompareValues(a.keys[k], b.keys[k]);
                if (c == 0) continue;
                return core.order_by[k].dir == SortDir::kAsc ? c < 0 : c > 0;
              }
              return false;
            });
          }
          break;
        case Section::kLimit:
          if (core.limit && static_cast<std::size_t>(*core.limit) < out.size()) {
            out.resize(static_cast<std::size_t>(*core.limit));
          }
          break;
        default:
          break;
      }
    }
    for (OutRow& o : out) result.table.rows.push_back(std::move(o.values));
    return result;
  }

  const Schema& schema_;
  const DatabaseContent* content_;
};

}  // namespace

ResultTable Execute(const Query& q, const DatabaseContent& content) {
  Engine engine(content.schema(), &content);
  return engine.Run(q).table;
}

void ValidateSemantics(const Query& q, const Schema& schema) {
  Engine engine(schema, nullptr);
  engine.Run(q);
}

}  // namespace sqlaug
