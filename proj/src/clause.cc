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

#include "sqlaug/clause.h"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "sqlaug/execution_order.h"

namespace sqlaug {

namespace {

constexpr std::array<std::pair<ClauseKind, std::string_view>, kClauseKindCount>
    kKindNames = {{
        {ClauseKind::kSelect, "SELECT"},
        {ClauseKind::kSelectGroupBy, "SELECT+GROUP_BY"},
        {ClauseKind::kWhere, "WHERE"},
        {ClauseKind::kWhereNested, "WHERE+NESTED_SELECT"},
        {ClauseKind::kGroupByHaving, "GROUP_BY+HAVING"},
        {ClauseKind::kOrderBy, "ORDER_BY"},
        {ClauseKind::kOrderByLimit, "ORDER_BY+LIMIT"},
        {ClauseKind::kOrderByGroupBy, "ORDER_BY+GROUP_BY"},
        {ClauseKind::kSetOp, "SET_OP"},
    }};

bool HasSubquery(const std::optional<Predicate>& p) {
  bool found = false;
  if (p) ForEachCondition(*p, [&](const Condition& c) { found |= c.has_subquery(); });
  return found;
}

// Unit query of every unit index of WriteQuery, numbered the same way.
struct UnitSource {
  const SelectCore* core = nullptr;
  std::optional<SetOpKind> set_op;  // set on the left unit of a set operation
};

void CollectQuery(const Query& q, std::vector<UnitSource>& out);

void CollectCore(const SelectCore& core, std::vector<UnitSource>& out) {
  out.push_back({&core, {}});
  auto visit = [&](const Condition& c) {
    if (c.has_subquery()) CollectQuery(*std::get<Box<Query>>(c.rhs), out);
  };
  if (core.where) ForEachCondition(*core.where, visit);
  if (core.having) ForEachCondition(*core.having, visit);
}

void CollectQuery(const Query& q, std::vector<UnitSource>& out) {
  std::size_t left = out.size();
  CollectCore(q.core, out);
  if (q.set_op) {
    out[left].set_op = q.set_op->kind;
    CollectCore(q.set_op->right, out);
  }
}

enum Slot { kSelectSlot, kWhereSlot, kHavingSlot, kOrderSlot, kSlotCount };

class Decomposer {
 public:
  explicit Decomposer(const Query& q) : wq_(WriteQuery(q)) { CollectQuery(q, units_); }

  std::vector<Clause> Run() { return QueryClauses(0); }

 private:
  std::optional<int> RightOf(int left) const {
    for (int v = left + 1; v < static_cast<int>(wq_.units.size()); ++v) {
      if (wq_.units[v].parent == wq_.units[left].parent) {
        if (wq_.units[v].set_side == 1) return v;
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::vector<Clause> QueryClauses(int left) {
    std::vector<Clause> out = UnitClauses(left, 0);
    std::optional<int> right = RightOf(left);
    if (!right) return out;
    Clause op;
    op.kind = ClauseKind::kSetOp;
    op.depth = wq_.units[left].depth;
    op.set_op = units_[left].set_op;
    for (int i = 0; i < static_cast<int>(wq_.tokens.size()); ++i) {
      const SqlToken& t = wq_.tokens[i];
      if (t.unit == left && t.section == Section::kSetOp) Add(op, i);
    }
    out.push_back(std::move(op));
    for (Clause& c : UnitClauses(*right, 1)) out.push_back(std::move(c));
    return out;
  }

  // Child of `u` on the path from `v` up to `u`, or -1 if `v` is not below u.
  int ChildBelow(int u, int v) const {
    while (v >= 0 && wq_.units[v].parent != u) v = wq_.units[v].parent;
    return v;
  }

  void Add(Clause& c, int position) const {
    c.tokens.push_back(wq_.tokens[position]);
    c.positions.push_back(position);
  }

  std::vector<std::vector<Clause>> Subqueries(int u, Section s) {
    std::vector<std::vector<Clause>> out;
    for (int v = u + 1; v < static_cast<int>(wq_.units.size()); ++v) {
      const UnitInfo& info = wq_.units[v];
      if (info.parent == u && info.parent_section == s && info.set_side == 0) {
        out.push_back(QueryClauses(v));
      }
    }
    return out;
  }

  std::vector<Clause> UnitClauses(int u, int side) {
    const SelectCore& core = *units_[u].core;
    const int depth = wq_.units[u].depth;
    const bool nested_where = HasSubquery(core.where);

    Slot group_slot = kHavingSlot;
    if (!core.having && !core.group_by.empty()) {
      auto aggregated = [](const AggExpr& e) { return e.is_aggregate(); };
      bool select_agg = std::any_of(core.select.begin(), core.select.end(), aggregated);
      bool order_agg = std::any_of(core.order_by.begin(), core.order_by.end(),
                                   [](const OrderItem& o) { return o.key.is_aggregate(); });
      group_slot = (!select_agg && order_agg) ? kOrderSlot : kSelectSlot;
    }
    const Slot limit_slot = core.order_by.empty() ? kSelectSlot : kOrderSlot;

    std::array<Clause, kSlotCount> slots;
    std::array<bool, kSlotCount> used{};
    used[kSelectSlot] = true;
    for (int i = 0; i < static_cast<int>(wq_.tokens.size()); ++i) {
      const SqlToken& t = wq_.tokens[i];
      Slot slot;
      if (t.unit == u) {
        switch (t.section) {
          case Section::kSelect: slot = kSelectSlot; break;
          case Section::kFrom:
            if (nested_where) Add(slots[kWhereSlot], i);
            slot = kSelectSlot;
            break;
          case Section::kWhere: slot = kWhereSlot; break;
          case Section::kGroupBy: slot = group_slot; break;
          case Section::kHaving: slot = kHavingSlot; break;
          case Section::kOrderBy: slot = kOrderSlot; break;
          case Section::kLimit: slot = limit_slot; break;
          default: continue;  // own set operator: handled by QueryClauses
        }
      } else {
        int child = ChildBelow(u, t.unit);
        if (child < 0) continue;
        slot = wq_.units[child].parent_section == Section::kHaving ? kHavingSlot : kWhereSlot;
      }
      Add(slots[slot], i);
      if (t.section != Section::kFrom || t.unit != u) used[slot] = true;
    }

    Clause& sel = slots[kSelectSlot];
    sel.kind = group_slot == kSelectSlot && !core.group_by.empty() ? ClauseKind::kSelectGroupBy
                                                                   : ClauseKind::kSelect;
    sel.distinct = core.distinct;
    sel.select = core.select;
    sel.from = core.from;
    if (sel.kind == ClauseKind::kSelectGroupBy) sel.group_by = core.group_by;
    if (limit_slot == kSelectSlot) sel.limit = core.limit;

    Clause& where = slots[kWhereSlot];
    where.kind = nested_where ? ClauseKind::kWhereNested : ClauseKind::kWhere;
    where.predicate = core.where;
    where.from = core.from;
    if (nested_where) where.nested = Subqueries(u, Section::kWhere);

    Clause& having = slots[kHavingSlot];
    having.kind = ClauseKind::kGroupByHaving;
    having.group_by = core.group_by;
    having.predicate = core.having;
    having.from = core.from;
    if (HasSubquery(core.having)) having.nested = Subqueries(u, Section::kHaving);

    Clause& order = slots[kOrderSlot];
    if (group_slot == kOrderSlot && !core.group_by.empty()) {
      order.kind = ClauseKind::kOrderByGroupBy;
      order.group_by = core.group_by;
    } else {
      order.kind = core.limit ? ClauseKind::kOrderByLimit : ClauseKind::kOrderBy;
    }
    order.order_by = core.order_by;
    order.limit = core.limit;
    order.from = core.from;

    std::vector<Clause> out;
    for (int s = 0; s < kSlotCount; ++s) {
      if (!used[s]) continue;
      slots[s].depth = depth;
      slots[s].set_side = side;
      out.push_back(std::move(slots[s]));
    }
    return out;
  }

  WrittenQuery wq_;
  std::vector<UnitSource> units_;
};

}  // namespace

std::string_view ClauseKindName(ClauseKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<ClauseKind> ParseClauseKind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

int Clause::Rank() const {
  switch (kind) {
    case ClauseKind::kWhere:
    case ClauseKind::kWhereNested: return ExecutionRank(Section::kWhere);
    case ClauseKind::kGroupByHaving: return ExecutionRank(Section::kGroupBy);
    case ClauseKind::kSelect:
    case ClauseKind::kSelectGroupBy: return ExecutionRank(Section::kSelect);
    case ClauseKind::kOrderBy:
    case ClauseKind::kOrderByLimit:
    case ClauseKind::kOrderByGroupBy: return ExecutionRank(Section::kOrderBy);
    case ClauseKind::kSetOp: break;
  }
  return static_cast<int>(kExecutionOrder.size());
}

std::string Clause::Text() const {
  std::string out;
  for (const SqlToken& t : tokens) {
    if (!out.empty() && t.space_before) out.push_back(' ');
    out += t.text;
  }
  return out;
}

std::string Clause::Key() const {
  std::string out;
  for (const SqlToken& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    switch (t.type) {
      case TokenType::kColumn: out += "C"; break;
      case TokenType::kValue: out += "V"; break;
      case TokenType::kTable: out += "T"; break;
      default: out += t.text;
    }
  }
  return out;
}

std::string NaturalColumnName(const ColumnRef& ref, const Schema* schema) {
  if (schema) {
    std::optional<int> c = schema->FindColumn(ref.table, ref.column);
    if (c) return schema->columns[*c].natural_name;
  }
  return NaturalizeIdentifier(ref.column);
}

std::string NaturalTableName(std::string_view table, const Schema* schema) {
  if (schema) {
    std::optional<int> t = schema->FindTable(table);
    if (t) return schema->tables[*t].natural_name;
  }
  return NaturalizeIdentifier(table);
}

std::vector<ClauseElement> ClauseElements(const Clause& clause, const Schema* schema) {
  std::vector<ClauseElement> out;
  auto add = [&](ClauseElement e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
  };
  for (const SqlToken& t : clause.tokens) {
    if (t.section == Section::kFrom || t.section == Section::kLimit) continue;
    if (t.type == TokenType::kColumn) {
      add({TokenType::kColumn, t.column.table + "." + t.column.column,
           NaturalColumnName(t.column, schema)});
    } else if (t.type == TokenType::kValue && t.literal) {
      std::string text = t.literal->ToString();
      std::string natural = text;
      // LIKE patterns are mentioned without their wildcards.
      natural.erase(std::remove(natural.begin(), natural.end(), '%'), natural.end());
      add({TokenType::kValue, text, natural});
    }
  }
  bool select_kind = clause.kind == ClauseKind::kSelect || clause.kind == ClauseKind::kSelectGroupBy;
  if (select_kind && clause.from.size() == 1) {
    add({TokenType::kTable, clause.from[0], NaturalTableName(clause.from[0], schema)});
  }
  return out;
}

std::vector<Clause> Decompose(const Query& q) { return Decomposer(q).Run(); }

std::vector<Clause> ExecutionOrder(std::vector<Clause> clauses) {
  std::stable_sort(clauses.begin(), clauses.end(), [](const Clause& a, const Clause& b) {
    return std::pair(a.set_side, a.Rank()) < std::pair(b.set_side, b.Rank());
  });
  return clauses;
}

}  // namespace sqlaug
