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

#include "sqlaug/sql_writer.h"

#include <utility>

namespace sqlaug {

std::string_view TokenTypeName(TokenType type) {
  switch (type) {
    case TokenType::kKeyword: return "keyword";
    case TokenType::kColumn: return "column";
    case TokenType::kTable: return "table";
    case TokenType::kValue: return "value";
    case TokenType::kOther: return "other";
  }
  return "other";
}

std::string WrittenQuery::Text() const {
  std::string out;
  for (const SqlToken& t : tokens) {
    if (!out.empty() && t.space_before) out.push_back(' ');
    out += t.text;
  }
  return out;
}

std::vector<std::string> WrittenQuery::Texts() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const SqlToken& t : tokens) out.push_back(t.text);
  return out;
}

namespace {

std::string QuoteString(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    out.push_back(c);
    if (c == '\'') out.push_back('\'');
  }
  out.push_back('\'');
  return out;
}

std::string ColumnText(const ColumnRef& ref, bool qualify) {
  if (ref.is_star()) return "*";
  if (qualify && !ref.table.empty()) return ref.table + "." + ref.column;
  return ref.column;
}

class Writer {
 public:
  WrittenQuery Finish() && { return std::move(out_); }

  void WriteTop(const Query& q) {
    int left = NewUnit(-1, Section::kWhere, 0, 0);
    WriteCore(q.core, left);
    if (q.set_op) {
      Emit(std::string(SetOpName(q.set_op->kind)), TokenType::kKeyword,
           Section::kSetOp, left, 0);
      int right = NewUnit(-1, Section::kWhere, 0, 1);
      WriteCore(q.set_op->right, right);
    }
  }

 private:
  int NewUnit(int parent, Section parent_section, int depth, int side) {
    out_.units.push_back({parent, parent_section, depth, side});
    return static_cast<int>(out_.units.size()) - 1;
  }

  SqlToken& Emit(std::string text, TokenType type, Section section, int unit,
                 int depth, bool space_before = true) {
    SqlToken t;
    t.text = std::move(text);
    t.type = type;
    t.section = section;
    t.unit = unit;
    t.depth = depth;
    t.space_before = space_before;
    out_.tokens.push_back(std::move(t));
    return out_.tokens.back();
  }

  void EmitColumn(const ColumnRef& ref, Section s, int unit, int depth,
                  bool space_before = true) {
    if (ref.is_star()) {
      Emit("*", TokenType::kOther, s, unit, depth, space_before);
      return;
    }
    SqlToken& t = Emit(ColumnText(ref, qualify_), TokenType::kColumn, s, unit,
                       depth, space_before);
    t.column = ref;
  }

  void EmitColumnExpr(const ColumnExpr& e, Section s, int unit, int depth,
                      bool space_before = true) {
    EmitColumn(e.left, s, unit, depth, space_before);
    if (e.is_calc()) {
      Emit(std::string(ArithSymbol(*e.op)), TokenType::kOther, s, unit, depth);
      EmitColumn(e.right, s, unit, depth);
    }
  }

  void EmitAggExpr(const AggExpr& e, Section s, int unit, int depth) {
    if (!e.is_aggregate()) {
      EmitColumnExpr(e.expr, s, unit, depth);
      return;
    }
    Emit(std::string(AggName(e.agg)), TokenType::kKeyword, s, unit, depth);
    Emit("(", TokenType::kOther, s, unit, depth, false);
    bool space = false;
    if (e.distinct) {
      Emit("DISTINCT", TokenType::kKeyword, s, unit, depth, false);
      space = true;
    }
    EmitColumnExpr(e.expr, s, unit, depth, space);
    Emit(")", TokenType::kOther, s, unit, depth, false);
  }

  void EmitLiteral(const Literal& lit, Section s, int unit, int depth) {
    SqlToken& t = Emit(lit.is_number() ? FormatNumber(lit.number())
                                       : QuoteString(lit.text()),
                       TokenType::kValue, s, unit, depth);
    t.literal = lit;
  }

  void EmitPredicate(const Predicate& p, Section s, int unit, int depth) {
    if (p.is_leaf()) {
      EmitCondition(*p.leaf, s, unit, depth);
      return;
    }
    for (std::size_t i = 0; i < p.children.size(); ++i) {
      if (i > 0) {
        Emit(std::string(ConnectiveName(p.op)), TokenType::kKeyword, s, unit, depth);
      }
      const Predicate& child = p.children[i];
      if (child.is_leaf()) {
        EmitCondition(*child.leaf, s, unit, depth);
      } else {
        Emit("(", TokenType::kOther, s, unit, depth);
        std::size_t first = out_.tokens.size();
        EmitPredicate(child, s, unit, depth);
        out_.tokens[first].space_before = false;
        Emit(")", TokenType::kOther, s, unit, depth, false);
      }
    }
  }

  void EmitCondition(const Condition& c, Section s, int unit, int depth) {
    EmitAggExpr(c.lhs, s, unit, depth);
    Emit(std::string(CompareSymbol(c.op)), c.op == CompareOp::kLike ||
                                                   c.op == CompareOp::kIn ||
                                                   c.op == CompareOp::kNotIn ||
                                                   c.op == CompareOp::kBetween
                                               ? TokenType::kKeyword
                                               : TokenType::kOther,
         s, unit, depth);
    if (const auto* lit = std::get_if<Literal>(&c.rhs)) {
      EmitLiteral(*lit, s, unit, depth);
      if (c.upper) {
        Emit("AND", TokenType::kKeyword, s, unit, depth);
        EmitLiteral(*c.upper, s, unit, depth);
      }
    } else if (const auto* col = std::get_if<ColumnExpr>(&c.rhs)) {
      EmitColumnExpr(*col, s, unit, depth);
    } else {
      const Query& inner = *std::get<Box<Query>>(c.rhs);
      Emit("(", TokenType::kOther, s, unit, depth);
      bool saved = qualify_;
      int inner_unit = NewUnit(unit, s, depth + 1, 0);
      WriteCore(inner.core, inner_unit);
      if (inner.set_op) {
        Emit(std::string(SetOpName(inner.set_op->kind)), TokenType::kKeyword,
             Section::kSetOp, inner_unit, depth + 1);
        int right = NewUnit(unit, s, depth + 1, 1);
        WriteCore(inner.set_op->right, right);
      }
      qualify_ = saved;
      Emit(")", TokenType::kOther, s, unit, depth);
    }
  }

  void WriteCore(const SelectCore& core, int unit) {
    const int depth = out_.units[unit].depth;
    qualify_ = core.from.size() > 1;
    Emit("SELECT", TokenType::kKeyword, Section::kSelect, unit, depth);
    if (core.distinct) {
      Emit("DISTINCT", TokenType::kKeyword, Section::kSelect, unit, depth);
    }
    for (std::size_t i = 0; i < core.select.size(); ++i) {
      if (i > 0) Emit(",", TokenType::kOther, Section::kSelect, unit, depth, false);
      EmitAggExpr(core.select[i], Section::kSelect, unit, depth);
    }

    Emit("FROM", TokenType::kKeyword, Section::kFrom, unit, depth);
    std::vector<bool> used(core.joins.size(), false);
    for (std::size_t i = 0; i < core.from.size(); ++i) {
      if (i > 0) Emit("JOIN", TokenType::kKeyword, Section::kFrom, unit, depth);
      SqlToken& t = Emit(core.from[i], TokenType::kTable, Section::kFrom, unit, depth);
      t.table = core.from[i];
      if (i == 0) continue;
      bool first = true;
      auto joined = [&](const std::string& t) {
        for (std::size_t j = 0; j <= i; ++j) {
          if (core.from[j] == t) return true;
        }
        return false;
      };
      for (std::size_t k = 0; k < core.joins.size(); ++k) {
        const JoinEdge& e = core.joins[k];
        if (used[k] || !joined(e.left_table) || !joined(e.right_table) ||
            (e.left_table != core.from[i] && e.right_table != core.from[i])) {
          continue;
        }
        used[k] = true;
        Emit(first ? "ON" : "AND", TokenType::kKeyword, Section::kFrom, unit, depth);
        first = false;
        EmitColumn({e.left_table, e.left_column}, Section::kFrom, unit, depth);
        Emit("=", TokenType::kOther, Section::kFrom, unit, depth);
        EmitColumn({e.right_table, e.right_column}, Section::kFrom, unit, depth);
      }
    }

    if (core.where) {
      Emit("WHERE", TokenType::kKeyword, Section::kWhere, unit, depth);
      EmitPredicate(*core.where, Section::kWhere, unit, depth);
    }
    if (!core.group_by.empty()) {
      Emit("GROUP BY", TokenType::kKeyword, Section::kGroupBy, unit, depth);
      for (std::size_t i = 0; i < core.group_by.size(); ++i) {
        if (i > 0) Emit(",", TokenType::kOther, Section::kGroupBy, unit, depth, false);
        EmitColumn(core.group_by[i], Section::kGroupBy, unit, depth);
      }
    }
    if (core.having) {
      Emit("HAVING", TokenType::kKeyword, Section::kHaving, unit, depth);
      EmitPredicate(*core.having, Section::kHaving, unit, depth);
    }
    if (!core.order_by.empty()) {
      Emit("ORDER BY", TokenType::kKeyword, Section::kOrderBy, unit, depth);
      for (std::size_t i = 0; i < core.order_by.size(); ++i) {
        if (i > 0) Emit(",", TokenType::kOther, Section::kOrderBy, unit, depth, false);
        EmitAggExpr(core.order_by[i].key, Section::kOrderBy, unit, depth);
        Emit(std::string(SortDirName(core.order_by[i].dir)), TokenType::kKeyword,
             Section::kOrderBy, unit, depth);
      }
    }
    if (core.limit) {
      Emit("LIMIT", TokenType::kKeyword, Section::kLimit, unit, depth);
      SqlToken& t = Emit(std::to_string(*core.limit), TokenType::kValue,
                         Section::kLimit, unit, depth);
      t.literal = Literal::Number(static_cast<double>(*core.limit));
    }
  }

  WrittenQuery out_;
  bool qualify_ = false;
};

}  // namespace

WrittenQuery WriteQuery(const Query& q) {
  Writer w;
  w.WriteTop(q);
  return std::move(w).Finish();
}

std::string SerializeSql(const Query& q) { return WriteQuery(q).Text(); }

std::string RenderAggExpr(const AggExpr& e, bool qualify) {
  std::string inner = ColumnText(e.expr.left, qualify);
  if (e.expr.is_calc()) {
    inner += " " + std::string(ArithSymbol(*e.expr.op)) + " " +
             ColumnText(e.expr.right, qualify);
  }
  if (!e.is_aggregate()) return inner;
  return std::string(AggName(e.agg)) + "(" + (e.distinct ? "DISTINCT " : "") +
         inner + ")";
}

}  // namespace sqlaug
