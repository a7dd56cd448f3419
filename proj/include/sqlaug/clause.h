// Clause decomposition of a query: the unit of hierarchical question
// generation. Keywords that only make sense together are bundled (GROUP BY
// with HAVING, ORDER BY with LIMIT, an outer comparison with its subquery).

#ifndef SQLAUG_CLAUSE_H_
#define SQLAUG_CLAUSE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqlaug/ast.h"
#include "sqlaug/schema.h"
#include "sqlaug/sql_writer.h"

namespace sqlaug {

enum class ClauseKind {
  kSelect,
  kSelectGroupBy,
  kWhere,
  kWhereNested,
  kGroupByHaving,
  kOrderBy,
  kOrderByLimit,
  kOrderByGroupBy,
  kSetOp,
};

inline constexpr int kClauseKindCount = 9;

std::string_view ClauseKindName(ClauseKind kind);  // "SELECT+GROUP_BY", ...
std::optional<ClauseKind> ParseClauseKind(std::string_view name);

struct Clause {
  ClauseKind kind = ClauseKind::kSelect;
  // Tokens in query order. SELECT clauses carry the FROM tokens of their
  // unit; a nested WHERE carries the outer FROM and the whole subquery.
  std::vector<SqlToken> tokens;
  std::vector<int> positions;  // index of each token in WriteQuery(q).tokens
  int depth = 0;
  int set_side = 0;

  // The parts of the unit query the clause expresses.
  bool distinct = false;
  std::vector<SelectItem> select;
  std::vector<std::string> from;
  std::optional<Predicate> predicate;  // WHERE or HAVING
  std::vector<ColumnRef> group_by;
  std::vector<OrderItem> order_by;
  std::optional<std::int64_t> limit;
  std::optional<SetOpKind> set_op;
  // Decomposition of each subquery of `predicate`, in condition order.
  std::vector<std::vector<Clause>> nested;

  // Rank of the clause in the execution order of its unit query.
  int Rank() const;
  std::string Text() const;
  // Tokens with columns, values and tables replaced by C, V and T.
  std::string Key() const;
};

// A database element mentioned by a clause.
struct ClauseElement {
  TokenType type = TokenType::kColumn;  // kColumn, kTable or kValue
  std::string name;                     // identifier or value text
  std::string natural;                  // words expected in a question
  friend bool operator==(const ClauseElement&, const ClauseElement&) = default;
};

// Distinct columns and values of the clause in token order, ignoring join
// conditions and LIMIT counts. SELECT clauses whose unit reads a single
// table also mention that table. `schema` supplies natural names and may be
// null.
std::vector<ClauseElement> ClauseElements(const Clause& clause, const Schema* schema);

// Natural name of a column or table, falling back to the identifier.
std::string NaturalColumnName(const ColumnRef& ref, const Schema* schema);
std::string NaturalTableName(std::string_view table, const Schema* schema);

// Clauses in source order: per unit query SELECT, WHERE, GROUP BY / HAVING,
// ORDER BY, with a SET_OP clause between the two units of a set operation.
std::vector<Clause> Decompose(const Query& q);

// Stable sort into execution order; units keep their left-to-right order
// with the SET_OP clause between them.
std::vector<Clause> ExecutionOrder(std::vector<Clause> clauses);

}  // namespace sqlaug

#endif  // SQLAUG_CLAUSE_H_
