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

#include "sqlaug/ast.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace sqlaug {

std::string_view AggName(AggFunc agg) {
  switch (agg) {
    case AggFunc::kNone: return "";
    case AggFunc::kMax: return "max";
    case AggFunc::kMin: return "min";
    case AggFunc::kCount: return "count";
    case AggFunc::kSum: return "sum";
    case AggFunc::kAvg: return "avg";
  }
  return "";
}

std::string_view ArithSymbol(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return "+";
    case ArithOp::kSub: return "-";
    case ArithOp::kMul: return "*";
    case ArithOp::kDiv: return "/";
  }
  return "?";
}

std::string_view CompareSymbol(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "<=";
    case CompareOp::kLike: return "LIKE";
    case CompareOp::kIn: return "IN";
    case CompareOp::kNotIn: return "NOT IN";
    case CompareOp::kBetween: return "BETWEEN";
  }
  return "?";
}

std::string_view SortDirName(SortDir dir) {
  return dir == SortDir::kAsc ? "ASC" : "DESC";
}

std::string_view SetOpName(SetOpKind op) {
  switch (op) {
    case SetOpKind::kIntersect: return "INTERSECT";
    case SetOpKind::kUnion: return "UNION";
    case SetOpKind::kExcept: return "EXCEPT";
  }
  return "?";
}

std::string_view ConnectiveName(Connective c) {
  return c == Connective::kAnd ? "AND" : "OR";
}

std::optional<AggFunc> ParseAggName(std::string_view name) {
  std::string lower(name);
  for (char& ch : lower) ch = static_cast<char>(std::tolower(ch));
  if (lower == "max") return AggFunc::kMax;
  if (lower == "min") return AggFunc::kMin;
  if (lower == "count") return AggFunc::kCount;
  if (lower == "sum") return AggFunc::kSum;
  if (lower == "avg") return AggFunc::kAvg;
  return std::nullopt;
}

std::string FormatNumber(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.0e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string Literal::ToString() const {
  if (is_number()) return FormatNumber(number());
  return text();
}

namespace {

bool PredicateHasAggregate(const std::optional<Predicate>& p) {
  if (!p) return false;
  bool found = false;
  ForEachCondition(*p, [&](const Condition& c) {
    if (c.lhs.is_aggregate()) found = true;
  });
  return found;
}

}  // namespace

bool SelectCore::has_aggregate() const {
  for (const SelectItem& item : select) {
    if (item.is_aggregate()) return true;
  }
  for (const OrderItem& item : order_by) {
    if (item.key.is_aggregate()) return true;
  }
  return PredicateHasAggregate(having);
}

std::vector<const SelectCore*> Units(const Query& q) {
  std::vector<const SelectCore*> units{&q.core};
  if (q.set_op) units.push_back(&q.set_op->right);
  return units;
}

namespace {

void CheckCore(const SelectCore& core, const std::string& where,
               std::vector<std::string>* issues) {
  if (core.select.empty()) issues->push_back(where + ": empty select list");
  if (core.from.empty()) issues->push_back(where + ": empty FROM");
  if (core.having && core.group_by.empty()) {
    issues->push_back(where + ": HAVING without GROUP BY");
  }
  if (core.limit && core.order_by.empty()) {
    issues->push_back(where + ": LIMIT without ORDER BY");
  }
  if (core.limit && *core.limit <= 0) {
    issues->push_back(where + ": non-positive LIMIT");
  }
  auto check_pred = [&](const std::optional<Predicate>& p) {
    if (!p) return;
    ForEachCondition(*p, [&](const Condition& c) {
      if (c.has_subquery()) {
        const Query& inner = *std::get<Box<Query>>(c.rhs);
        for (const SelectCore* u : Units(inner)) {
          CheckCore(*u, where + "/nested", issues);
          auto nested_pred = [&](const std::optional<Predicate>& np) {
            if (!np) return;
            ForEachCondition(*np, [&](const Condition& nc) {
              if (nc.has_subquery()) {
                issues->push_back(where + ": nesting deeper than one level");
              }
            });
          };
          nested_pred(u->where);
          nested_pred(u->having);
        }
      }
      if (c.op == CompareOp::kBetween && !c.upper) {
        issues->push_back(where + ": BETWEEN without upper bound");
      }
    });
  };
  check_pred(core.where);
  check_pred(core.having);
}

}  // namespace

std::vector<std::string> CanonicalityIssues(const Query& q) {
  std::vector<std::string> issues;
  CheckCore(q.core, "left", &issues);
  if (q.set_op) CheckCore(q.set_op->right, "right", &issues);
  return issues;
}

}  // namespace sqlaug
