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

#include "sqlaug/sql_parser.h"

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "sqlaug/error.h"
#include "sqlaug/lexer.h"

namespace sqlaug {
namespace {

// Name-resolution scope of one unit query.
struct Scope {
  std::vector<std::pair<std::string, std::string>> aliases;  // alias -> table
  std::vector<std::string> tables;
  const Scope* parent = nullptr;

  const std::string* Lookup(std::string_view alias) const {
    for (const auto& [a, t] : aliases) {
      if (EqualsIgnoreCase(a, alias)) return &t;
    }
    return parent ? parent->Lookup(alias) : nullptr;
  }
};

class Parser {
 public:
  Parser(std::string_view text, const Schema* schema)
      : tokens_(Lex(text)), schema_(schema) {}

  Query ParseTop() {
    Query q = ParseQuery(nullptr);
    if (Peek().kind != LexKind::kEnd) Fail({"end of input"});
    return q;
  }

 private:
  const LexToken& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const LexToken& Next() {
    const LexToken& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool IsKeyword(std::string_view kw, std::size_t ahead = 0) const {
    const LexToken& t = Peek(ahead);
    return t.kind == LexKind::kKeyword && t.text == kw;
  }
  bool IsSymbol(std::string_view sym, std::size_t ahead = 0) const {
    const LexToken& t = Peek(ahead);
    return t.kind == LexKind::kSymbol && t.text == sym;
  }
  bool AcceptKeyword(std::string_view kw) {
    if (!IsKeyword(kw)) return false;
    Next();
    return true;
  }
  bool AcceptSymbol(std::string_view sym) {
    if (!IsSymbol(sym)) return false;
    Next();
    return true;
  }
  void ExpectKeyword(std::string_view kw) {
    if (!AcceptKeyword(kw)) Fail({std::string(kw)});
  }
  void ExpectSymbol(std::string_view sym) {
    if (!AcceptSymbol(sym)) Fail({std::string(sym)});
  }
  [[noreturn]] void Fail(std::vector<std::string> expected) const {
    const LexToken& t = Peek();
    throw SyntaxError(t.offset, std::move(expected),
                      t.kind == LexKind::kEnd ? "end of input" : t.text);
  }

  Query ParseQuery(const Scope* parent) {
    Query q;
    q.core = ParseCore(parent);
    for (std::string_view op : {"INTERSECT", "UNION", "EXCEPT"}) {
      if (AcceptKeyword(op)) {
        SetOperation set_op;
        set_op.kind = op == "INTERSECT" ? SetOpKind::kIntersect
                      : op == "UNION"   ? SetOpKind::kUnion
                                        : SetOpKind::kExcept;
        set_op.right = ParseCore(parent);
        q.set_op = std::move(set_op);
        break;
      }
    }
    if (IsKeyword("INTERSECT") || IsKeyword("UNION") || IsKeyword("EXCEPT")) {
      Fail({"end of query (only one set operation is supported)"});
    }
    return q;
  }

  SelectCore ParseCore(const Scope* parent) {
    SelectCore core;
    Scope scope;
    scope.parent = parent;
    ExpectKeyword("SELECT");
    core.distinct = AcceptKeyword("DISTINCT");
    do {
      core.select.push_back(ParseAggExpr());
    } while (AcceptSymbol(","));
    ExpectKeyword("FROM");
    ParseFrom(&core, &scope);
    // Column references are resolved once the FROM scope is known; nested
    // queries resolve themselves against their own scope while parsing.
    for (SelectItem& item : core.select) Resolve(&item.expr, scope);
    for (JoinEdge& e : core.joins) ResolveEdge(&e, scope);
    if (AcceptKeyword("WHERE")) core.where = ParsePredicate(scope);
    if (AcceptKeyword("GROUP BY")) {
      do {
        ColumnRef ref = ParseColumnRef();
        Resolve(&ref, scope);
        core.group_by.push_back(std::move(ref));
      } while (AcceptSymbol(","));
    }
    if (AcceptKeyword("HAVING")) {
      if (core.group_by.empty()) {
        throw SyntaxError(tokens_[pos_ - 1].offset, {"GROUP BY before HAVING"},
                          "HAVING");
      }
      core.having = ParsePredicate(scope);
    }
    if (AcceptKeyword("ORDER BY")) {
      do {
        OrderItem item;
        item.key = ParseAggExpr();
        Resolve(&item.key.expr, scope);
        if (AcceptKeyword("DESC")) {
          item.dir = SortDir::kDesc;
        } else {
          AcceptKeyword("ASC");
        }
        core.order_by.push_back(std::move(item));
      } while (AcceptSymbol(","));
    }
    if (AcceptKeyword("LIMIT")) {
      const LexToken& t = Peek();
      std::int64_t n = 0;
      if (t.kind != LexKind::kNumber ||
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), n).ec !=
              std::errc()) {
        Fail({"integer"});
      }
      Next();
      core.limit = n;
    }
    NormalizeJoins(&core);
    return core;
  }

  void ParseFrom(SelectCore* core, Scope* scope) {
    auto parse_table = [&]() {
      const LexToken& t = Peek();
      if (t.kind != LexKind::kIdent) Fail({"table name"});
      std::string name = Next().text;
      if (schema_ && !schema_->FindTable(name)) {
        std::vector<std::string> candidates;
        for (const Table& tab : schema_->tables) candidates.push_back(tab.name);
        throw UnknownIdentifierError(name, std::move(candidates));
      }
      std::string alias = name;
      if (AcceptKeyword("AS")) {
        if (Peek().kind != LexKind::kIdent) Fail({"alias"});
        alias = Next().text;
      } else if (Peek().kind == LexKind::kIdent) {
        alias = Next().text;
      }
      for (const std::string& existing : core->from) {
        if (EqualsIgnoreCase(existing, name)) {
          throw SyntaxError(t.offset, {"distinct table (self-joins unsupported)"},
                            name);
        }
      }
      core->from.push_back(name);
      scope->tables.push_back(name);
      scope->aliases.emplace_back(alias, name);
      if (!EqualsIgnoreCase(alias, name)) scope->aliases.emplace_back(name, name);
    };
    parse_table();
    while (true) {
      if (AcceptKeyword("JOIN")) {
        parse_table();
        if (AcceptKeyword("ON")) {
          do {
            JoinEdge e;
            ColumnRef l = ParseColumnRef();
            ExpectSymbol("=");
            ColumnRef r = ParseColumnRef();
            e.left_table = l.table;
            e.left_column = l.column;
            e.right_table = r.table;
            e.right_column = r.column;
            core->joins.push_back(std::move(e));
          } while (AcceptKeyword("AND"));
        }
      } else if (AcceptSymbol(",")) {
        parse_table();
      } else {
        break;
      }
    }
  }

  // Replaces the join edges of a multi-table FROM by the FK path rooted at
  // the first table; written ON clauses are kept only when the tables have
  // no FK path.
  void NormalizeJoins(SelectCore* core) {
    if (!schema_ || core->from.size() < 2) return;
    std::set<int> ids;
    for (const std::string& t : core->from) ids.insert(*schema_->FindTable(t));
    JoinPath path;
    try {
      path = FindJoinPath(*schema_, ids, *schema_->FindTable(core->from[0]));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDisconnected || core->joins.empty()) throw;
      return;
    }
    // Spell table names the way FROM spells them.
    auto spelled = [&](const std::string& t) {
      for (const std::string& f : core->from) {
        if (EqualsIgnoreCase(f, t)) return f;
      }
      return t;
    };
    std::vector<std::string> from;
    for (const std::string& t : path.tables) from.push_back(spelled(t));
    core->joins.clear();
    for (JoinEdge e : path.edges) {
      e.left_table = spelled(e.left_table);
      e.right_table = spelled(e.right_table);
      core->joins.push_back(std::move(e));
    }
    core->from = std::move(from);
  }

  ColumnRef ParseColumnRef() {
    const LexToken& t = Peek();
    if (t.kind != LexKind::kIdent) Fail({"column"});
    std::string text = Next().text;
    ColumnRef ref;
    std::size_t dot = text.rfind('.');
    if (dot == std::string::npos) {
      ref.column = std::move(text);
    } else {
      ref.table = text.substr(0, dot);  // qualifier, resolved later
      ref.column = text.substr(dot + 1);
    }
    return ref;
  }

  ColumnExpr ParseColumnExpr() {
    if (AcceptSymbol("*")) return ColumnExpr::Star();
    ColumnExpr e = ColumnExpr::Column(ParseColumnRef());
    static constexpr std::pair<std::string_view, ArithOp> kOps[] = {
        {"+", ArithOp::kAdd}, {"-", ArithOp::kSub},
        {"*", ArithOp::kMul}, {"/", ArithOp::kDiv}};
    for (const auto& [sym, op] : kOps) {
      if (IsSymbol(sym) && Peek(1).kind == LexKind::kIdent) {
        Next();
        e.op = op;
        e.right = ParseColumnRef();
        break;
      }
    }
    return e;
  }

  AggExpr ParseAggExpr() {
    AggExpr e;
    const LexToken& t = Peek();
    if (t.kind == LexKind::kIdent && IsSymbol("(", 1)) {
      std::optional<AggFunc> agg = ParseAggName(t.text);
      if (!agg) Fail({"aggregate function"});
      Next();
      Next();
      e.agg = *agg;
      e.distinct = AcceptKeyword("DISTINCT");
      e.expr = ParseColumnExpr();
      ExpectSymbol(")");
      return e;
    }
    e.expr = ParseColumnExpr();
    return e;
  }

  std::optional<Literal> TryLiteral() {
    const LexToken& t = Peek();
    bool negative = false;
    if (t.kind == LexKind::kSymbol && t.text == "-" && Peek(1).kind == LexKind::kNumber) {
      Next();
      negative = true;
    }
    const LexToken& v = Peek();
    if (v.kind == LexKind::kNumber) {
      double d = 0;
      auto res = std::from_chars(v.text.data(), v.text.data() + v.text.size(), d);
      if (res.ec != std::errc()) Fail({"number"});
      Next();
      return Literal::Number(negative ? -d : d);
    }
    if (negative) Fail({"number"});
    if (v.kind == LexKind::kString) {
      std::string s = Next().text;
      return Literal::Text(std::move(s));
    }
    return std::nullopt;
  }

  Literal ExpectLiteral() {
    std::optional<Literal> lit = TryLiteral();
    if (!lit) Fail({"literal"});
    return std::move(*lit);
  }

  Predicate ParsePredicate(const Scope& scope) {
    std::vector<Predicate> terms;
    terms.push_back(ParseConjunction(scope));
    while (AcceptKeyword("OR")) terms.push_back(ParseConjunction(scope));
    if (terms.size() == 1) return std::move(terms.front());
    return Predicate{std::nullopt, Connective::kOr, std::move(terms)};
  }

  Predicate ParseConjunction(const Scope& scope) {
    std::vector<Predicate> terms;
    terms.push_back(ParseAtom(scope));
    while (AcceptKeyword("AND")) terms.push_back(ParseAtom(scope));
    if (terms.size() == 1) return std::move(terms.front());
    return Predicate{std::nullopt, Connective::kAnd, std::move(terms)};
  }

  Predicate ParseAtom(const Scope& scope) {
    if (IsSymbol("(") && !IsKeyword("SELECT", 1)) {
      Next();
      Predicate inner = ParsePredicate(scope);
      ExpectSymbol(")");
      return inner;
    }
    return Predicate::Leaf(ParseCondition(scope));
  }

  Condition ParseCondition(const Scope& scope) {
    Condition c;
    c.lhs = ParseAggExpr();
    Resolve(&c.lhs.expr, scope);
    const LexToken& t = Peek();
    static constexpr std::pair<std::string_view, CompareOp> kSymbols[] = {
        {"=", CompareOp::kEq},  {"!=", CompareOp::kNe}, {">", CompareOp::kGt},
        {">=", CompareOp::kGe}, {"<", CompareOp::kLt},  {"<=", CompareOp::kLe}};
    bool found = false;
    if (t.kind == LexKind::kSymbol) {
      for (const auto& [sym, op] : kSymbols) {
        if (t.text == sym) {
          c.op = op;
          found = true;
        }
      }
    } else if (t.kind == LexKind::kKeyword) {
      if (t.text == "LIKE") c.op = CompareOp::kLike, found = true;
      if (t.text == "IN") c.op = CompareOp::kIn, found = true;
      if (t.text == "NOT IN") c.op = CompareOp::kNotIn, found = true;
      if (t.text == "BETWEEN") c.op = CompareOp::kBetween, found = true;
    }
    if (!found) Fail({"comparison operator"});
    Next();

    if (c.op == CompareOp::kBetween) {
      c.rhs = ExpectLiteral();
      ExpectKeyword("AND");
      c.upper = ExpectLiteral();
      return c;
    }
    if (IsSymbol("(") && IsKeyword("SELECT", 1)) {
      Next();
      c.rhs = Box<Query>(ParseQuery(&scope));
      ExpectSymbol(")");
      return c;
    }
    if (c.op == CompareOp::kIn || c.op == CompareOp::kNotIn) Fail({"( SELECT"});
    if (std::optional<Literal> lit = TryLiteral()) {
      c.rhs = std::move(*lit);
      return c;
    }
    if (Peek().kind == LexKind::kIdent) {
      ColumnExpr e = ParseColumnExpr();
      Resolve(&e, scope);
      c.rhs = std::move(e);
      return c;
    }
    Fail({"literal", "column", "( SELECT"});
  }

  void Resolve(ColumnExpr* e, const Scope& scope) {
    Resolve(&e->left, scope);
    if (e->is_calc()) Resolve(&e->right, scope);
  }

  void ResolveEdge(JoinEdge* e, const Scope& scope) {
    ColumnRef l{e->left_table, e->left_column};
    ColumnRef r{e->right_table, e->right_column};
    Resolve(&l, scope);
    Resolve(&r, scope);
    *e = JoinEdge{l.table, l.column, r.table, r.column};
  }

  void Resolve(ColumnRef* ref, const Scope& scope) {
    if (ref->is_star()) {
      ref->table.clear();
      return;
    }
    if (!ref->table.empty()) {
      const std::string* table = scope.Lookup(ref->table);
      if (!table) {
        std::vector<std::string> candidates;
        for (const Scope* s = &scope; s; s = s->parent) {
          for (const auto& [a, t] : s->aliases) candidates.push_back(a);
        }
        throw UnknownIdentifierError(ref->table, std::move(candidates));
      }
      ref->table = *table;
      if (schema_) CheckColumn(*ref);
      return;
    }
    if (!schema_) {
      if (scope.tables.size() == 1) ref->table = scope.tables.front();
      return;
    }
    for (const Scope* s = &scope; s; s = s->parent) {
      for (const std::string& t : s->tables) {
        if (schema_->FindColumn(t, ref->column)) {
          ref->table = t;
          return;
        }
      }
    }
    std::vector<std::string> candidates;
    for (const std::string& t : scope.tables) {
      int tid = *schema_->FindTable(t);
      for (int c : schema_->tables[tid].columns) {
        candidates.push_back(schema_->columns[c].name);
      }
    }
    throw UnknownIdentifierError(ref->column, std::move(candidates));
  }

  void CheckColumn(const ColumnRef& ref) {
    if (schema_->FindColumn(ref.table, ref.column)) return;
    std::vector<std::string> candidates;
    if (std::optional<int> tid = schema_->FindTable(ref.table)) {
      for (int c : schema_->tables[*tid].columns) {
        candidates.push_back(schema_->columns[c].name);
      }
    }
    throw UnknownIdentifierError(ref.table + "." + ref.column, std::move(candidates));
  }

  std::vector<LexToken> tokens_;
  std::size_t pos_ = 0;
  const Schema* schema_;
};

}  // namespace

SqlAst ParseSql(std::string_view text, const Schema* schema) {
  Parser parser(text, schema);
  return parser.ParseTop();
}

}  // namespace sqlaug
