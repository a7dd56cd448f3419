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

// Typed syntax tree for the supported SQL subset: SELECT / WHERE / GROUP BY /
// HAVING / ORDER BY / LIMIT, two-column arithmetic, one level of nested
// subqueries and at most one set operation between two unit queries.

#ifndef SQLAUG_AST_H_
#define SQLAUG_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sqlaug {

// Owning pointer with value semantics: copies are deep, comparison compares
// the pointees. Used to break the Query -> Condition -> Query recursion.
template <typename T>
class Box {
 public:
  Box() : ptr_(std::make_unique<T>()) {}
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

enum class AggFunc { kNone, kMax, kMin, kCount, kSum, kAvg };
enum class ArithOp { kAdd, kSub, kMul, kDiv };
enum class CompareOp { kEq, kNe, kGt, kGe, kLt, kLe, kLike, kIn, kNotIn, kBetween };
enum class SortDir { kAsc, kDesc };
enum class SetOpKind { kIntersect, kUnion, kExcept };
enum class Connective { kAnd, kOr };

std::string_view AggName(AggFunc agg);          // "max", "count", ...
std::string_view ArithSymbol(ArithOp op);       // "+", "-", "*", "/"
std::string_view CompareSymbol(CompareOp op);   // "=", "!=", "NOT IN", ...
std::string_view SortDirName(SortDir dir);      // "ASC" / "DESC"
std::string_view SetOpName(SetOpKind op);       // "INTERSECT", ...
std::string_view ConnectiveName(Connective c);  // "AND" / "OR"

std::optional<AggFunc> ParseAggName(std::string_view name);

// A column reference. `column == "*"` denotes the star; `table` is the
// resolved table name or empty when it could not be resolved.
struct ColumnRef {
  std::string table;
  std::string column;

  bool is_star() const { return column == "*"; }
  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

// A column, the star, or a binary arithmetic over two columns.
struct ColumnExpr {
  ColumnRef left;
  std::optional<ArithOp> op;
  ColumnRef right;

  static ColumnExpr Column(ColumnRef ref) { return {std::move(ref), {}, {}}; }
  static ColumnExpr Star() { return {{"", "*"}, {}, {}}; }
  bool is_calc() const { return op.has_value(); }
  friend bool operator==(const ColumnExpr&, const ColumnExpr&) = default;
};

// An optionally aggregated column expression. Used for select items,
// the left side of conditions and ORDER BY keys.
struct AggExpr {
  AggFunc agg = AggFunc::kNone;
  bool distinct = false;
  ColumnExpr expr;

  bool is_aggregate() const { return agg != AggFunc::kNone; }
  friend bool operator==(const AggExpr&, const AggExpr&) = default;
};

using SelectItem = AggExpr;

struct Literal {
  std::variant<double, std::string> value;

  static Literal Number(double v) { return {v}; }
  static Literal Text(std::string v) { return {std::move(v)}; }
  bool is_number() const { return std::holds_alternative<double>(value); }
  double number() const { return std::get<double>(value); }
  const std::string& text() const { return std::get<std::string>(value); }
  // Canonical rendering without quotes: integers print without a fraction.
  std::string ToString() const;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// Shortest round-trip decimal rendering; integral values print as integers.
std::string FormatNumber(double v);

struct Query;

// Right-hand side of a condition: a literal, a column expression or a
// parenthesized subquery.
using Operand = std::variant<Literal, ColumnExpr, Box<Query>>;

struct Condition {
  AggExpr lhs;
  CompareOp op = CompareOp::kEq;
  Operand rhs;
  std::optional<Literal> upper;  // BETWEEN upper bound

  bool has_subquery() const { return std::holds_alternative<Box<Query>>(rhs); }
  friend bool operator==(const Condition&, const Condition&) = default;
};

// AND/OR tree. A leaf holds a condition and no children; an inner node holds
// a connective and at least two children.
struct Predicate {
  std::optional<Condition> leaf;
  Connective op = Connective::kAnd;
  std::vector<Predicate> children;

  static Predicate Leaf(Condition c) { return {std::move(c), {}, {}}; }
  bool is_leaf() const { return leaf.has_value(); }
  friend bool operator==(const Predicate&, const Predicate&) = default;
};

// Equi-join between two tables along a foreign key.
struct JoinEdge {
  std::string left_table;
  std::string left_column;
  std::string right_table;
  std::string right_column;
  friend bool operator==(const JoinEdge&, const JoinEdge&) = default;
};

struct OrderItem {
  AggExpr key;
  SortDir dir = SortDir::kAsc;
  friend bool operator==(const OrderItem&, const OrderItem&) = default;
};

// One unit query.
struct SelectCore {
  bool distinct = false;
  std::vector<SelectItem> select;
  std::vector<std::string> from;
  std::vector<JoinEdge> joins;
  std::optional<Predicate> where;
  std::vector<ColumnRef> group_by;
  std::optional<Predicate> having;
  std::vector<OrderItem> order_by;
  std::optional<std::int64_t> limit;

  bool has_aggregate() const;  // any aggregate in SELECT, HAVING or ORDER BY
  friend bool operator==(const SelectCore&, const SelectCore&) = default;
};

struct SetOperation {
  SetOpKind kind = SetOpKind::kUnion;
  SelectCore right;
  friend bool operator==(const SetOperation&, const SetOperation&) = default;
};

struct Query {
  SelectCore core;
  std::optional<SetOperation> set_op;
  friend bool operator==(const Query&, const Query&) = default;
};

using SqlAst = Query;

// Visits every condition of a predicate tree in left-to-right order.
template <typename Fn>
void ForEachCondition(const Predicate& p, Fn&& fn) {
  if (p.is_leaf()) {
    fn(*p.leaf);
    return;
  }
  for (const Predicate& c : p.children) ForEachCondition(c, fn);
}

// Unit queries of a query in left-to-right order (one or two).
std::vector<const SelectCore*> Units(const Query& q);

// Type invariants that the parser does not enforce. Each returned string
// describes one violation; an empty result means canonical.
std::vector<std::string> CanonicalityIssues(const Query& q);

}  // namespace sqlaug

#endif  // SQLAUG_AST_H_
