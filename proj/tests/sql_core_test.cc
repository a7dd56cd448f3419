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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixtures.h"
#include "sqlaug/error.h"
#include "sqlaug/pattern.h"
#include "sqlaug/sql_parser.h"
#include "sqlaug/sql_writer.h"

namespace sqlaug {
namespace {

using testing::FixtureDatabase;
using testing::GeneratedSample;

TEST(ParseSqlTest, SingleCondition) {
  Query q = ParseSql("SELECT draw_size FROM matches WHERE loser_age > 10");
  ASSERT_EQ(q.core.select.size(), 1u);
  EXPECT_FALSE(q.core.select[0].is_aggregate());
  EXPECT_EQ(q.core.select[0].expr.left.column, "draw_size");
  EXPECT_EQ(q.core.from, std::vector<std::string>{"matches"});
  ASSERT_TRUE(q.core.where && q.core.where->is_leaf());
  const Condition& c = *q.core.where->leaf;
  EXPECT_EQ(c.lhs.expr.left.column, "loser_age");
  EXPECT_EQ(c.op, CompareOp::kGt);
  EXPECT_EQ(std::get<Literal>(c.rhs), Literal::Number(10));
  EXPECT_FALSE(q.set_op);
}

TEST(ParseSqlTest, MinimalQuery) {
  Query q = ParseSql("SELECT * FROM t");
  ASSERT_EQ(q.core.select.size(), 1u);
  EXPECT_TRUE(q.core.select[0].expr.left.is_star());
  EXPECT_EQ(q.core.from, std::vector<std::string>{"t"});
  EXPECT_FALSE(q.core.where);
  EXPECT_TRUE(q.core.group_by.empty());
  EXPECT_FALSE(q.core.having);
  EXPECT_TRUE(q.core.order_by.empty());
  EXPECT_FALSE(q.core.limit);
}

TEST(ParseSqlTest, OrderByUnderscoreAlias) {
  Query q = ParseSql("SELECT horsepower FROM cars_data WHERE edispl <= 10 ORDER_BY year DESC");
  ASSERT_TRUE(q.core.where);
  EXPECT_EQ(q.core.where->leaf->op, CompareOp::kLe);
  ASSERT_EQ(q.core.order_by.size(), 1u);
  EXPECT_EQ(q.core.order_by[0].key.expr.left.column, "year");
  EXPECT_EQ(q.core.order_by[0].dir, SortDir::kDesc);
  EXPECT_FALSE(q.core.limit);
}

TEST(ParseSqlTest, KeywordsAreCaseInsensitiveIdentifiersPreserved) {
  Query q = ParseSql("select Name from Head where Born_State != 'California'");
  EXPECT_EQ(SerializeSql(q), "SELECT Name FROM Head WHERE Born_State != 'California'");
}

TEST(ParseSqlTest, SyntaxErrorReportsPositionAndExpected) {
  try {
    ParseSql("SELECT name FROM");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_EQ(e.position(), 16u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(ParseSqlTest, UnknownIdentifierListsCandidates) {
  const Schema& s = *FixtureDatabase("department_management").schema;
  try {
    ParseSql("SELECT nme FROM head", &s);
    FAIL() << "expected an unknown identifier";
  } catch (const UnknownIdentifierError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownIdentifier);
    EXPECT_EQ(e.name(), "nme");
    EXPECT_NE(std::find(e.candidates().begin(), e.candidates().end(), "name"),
              e.candidates().end());
  }
  EXPECT_THROW(ParseSql("SELECT name FROM heads", &s), UnknownIdentifierError);
}

TEST(ParseSqlTest, ExplicitJoinIsNormalizedToForeignKeyPath) {
  const Schema& s = *FixtureDatabase("concert_singer").schema;
  Query a = ParseSql(
      "SELECT T1.location FROM stadium AS T1 JOIN concert AS T2 ON T2.stadium_id = "
      "T1.stadium_id WHERE T2.year = 2014",
      &s);
  EXPECT_EQ(SerializeSql(a),
            "SELECT stadium.location FROM stadium JOIN concert ON stadium.Stadium_ID = "
            "concert.Stadium_ID WHERE concert.year = 2014");
  // The ON text does not matter: the edge comes from the foreign key.
  Query b = ParseSql(
      "SELECT stadium.location FROM stadium JOIN concert ON stadium.capacity = concert.year "
      "WHERE concert.year = 2014",
      &s);
  EXPECT_EQ(a, b);
}

TEST(ParseSqlTest, LimitWithoutOrderIsAcceptedButFlagged) {
  Query q = ParseSql("SELECT a FROM t LIMIT 3");
  EXPECT_EQ(q.core.limit, 3);
  EXPECT_FALSE(CanonicalityIssues(q).empty());
  EXPECT_TRUE(CanonicalityIssues(ParseSql("SELECT a FROM t ORDER BY a LIMIT 3")).empty());
}

TEST(ParseSqlTest, HavingWithoutGroupByIsRejected) {
  EXPECT_THROW(ParseSql("SELECT count(*) FROM t HAVING count(*) > 1"), Error);
}

TEST(ParseSqlTest, OperatorInventory) {
  for (const char* op : {"=", "!=", ">", ">=", "<", "<="}) {
    EXPECT_NO_THROW(ParseSql(std::string("SELECT a FROM t WHERE b ") + op + " 1")) << op;
  }
  EXPECT_EQ(ParseSql("SELECT a FROM t WHERE b LIKE '%x%'").core.where->leaf->op, CompareOp::kLike);
  EXPECT_EQ(ParseSql("SELECT a FROM t WHERE b BETWEEN 1 AND 5").core.where->leaf->op,
            CompareOp::kBetween);
  EXPECT_EQ(ParseSql("SELECT a FROM t WHERE b IN (SELECT c FROM u)").core.where->leaf->op,
            CompareOp::kIn);
  EXPECT_EQ(ParseSql("SELECT a FROM t WHERE b NOT IN (SELECT c FROM u)").core.where->leaf->op,
            CompareOp::kNotIn);
}

TEST(SerializeSqlTest, MinimalQuery) {
  EXPECT_EQ(SerializeSql(ParseSql("SELECT * FROM t")), "SELECT * FROM t");
}

TEST(SerializeSqlTest, RoundTripIsFixedPoint) {
  const std::string sql = "SELECT draw_size FROM matches WHERE loser_age > 10";
  EXPECT_EQ(SerializeSql(ParseSql(sql)), sql);
  EXPECT_EQ(SerializeSql(ParseSql("select  draw_size\nfrom matches where loser_age>10")), sql);
}

TEST(SerializeSqlTest, NestedQueryIsParenthesized) {
  SelectCore inner;
  // Columns carry their table, as the parser resolves them against FROM.
  inner.select.push_back({AggFunc::kMax, false, ColumnExpr::Column({"Wine", "Price"})});
  inner.from = {"Wine"};
  Query sub;
  sub.core = inner;
  Condition c;
  c.lhs.expr = ColumnExpr::Column({"Wine", "Price"});
  c.op = CompareOp::kGt;
  c.rhs = Box<Query>(sub);
  Query q;
  q.core.select.push_back({AggFunc::kNone, false, ColumnExpr::Column({"Wine", "name"})});
  q.core.from = {"Wine"};
  q.core.where = Predicate::Leaf(c);
  std::string sql = SerializeSql(q);
  EXPECT_EQ(sql, "SELECT name FROM Wine WHERE Price > ( SELECT max(Price) FROM Wine )");
  EXPECT_EQ(ParseSql(sql), q);
}

TEST(SerializeSqlTest, SetOperationAndCalculation) {
  const std::string sql =
      "SELECT weight / horsepower FROM cars_data WHERE year = 1975 INTERSECT SELECT weight / "
      "horsepower FROM cars_data WHERE cylinders = 4";
  EXPECT_EQ(SerializeSql(ParseSql(sql)), sql);
}

TEST(ExtractPatternTest, Examples) {
  EXPECT_EQ(ExtractPattern(ParseSql("SELECT draw_size FROM matches WHERE loser_age > 10"))
                .ToString(),
            "SELECT A WHERE C OP V");
  EXPECT_EQ(ExtractPattern(ParseSql("SELECT * FROM t")).ToString(), "SELECT A");
  EXPECT_EQ(ExtractPattern(ParseSql("SELECT name FROM Wine WHERE Price > (SELECT max(Price) "
                                    "FROM Wine)"))
                .ToString(),
            "SELECT A WHERE C OP NESTED_OPEN SELECT AGG A NESTED_CLOSE");
}

TEST(ExtractPatternTest, ClausesAndOperators) {
  EXPECT_EQ(ExtractPattern(ParseSql("SELECT c, count(*) FROM t GROUP BY c HAVING count(*) > 3 "
                                    "ORDER BY count(*) DESC LIMIT 5"))
                .ToString(),
            "SELECT A AGG A GROUP_BY C HAVING AGG C OP V ORDER_BY AGG C DIR LIMIT V");
  EXPECT_EQ(ExtractPattern(ParseSql("SELECT a + b FROM t WHERE c BETWEEN 1 AND 2 OR d = 'x' "
                                    "UNION SELECT e FROM u"))
                .ToString(),
            "SELECT CALC WHERE C OP V V OR C OP V UNION SELECT A");
}

TEST(PatternTest, TextRoundTripAndAlphabet) {
  EXPECT_EQ(kPatternAlphabetSize, 20);
  for (int i = 0; i < kPatternAlphabetSize; ++i) {
    auto t = static_cast<PatternToken>(i);
    EXPECT_EQ(ParsePatternToken(PatternTokenName(t)), t);
  }
  Pattern p = ParsePattern("SELECT AGG A WHERE C OP V");
  EXPECT_EQ(p.ToString(), "SELECT AGG A WHERE C OP V");
  EXPECT_THROW(ParsePattern("SELECT FROM"), Error);
}

// Renames every table, column and literal; the pattern must not move.
TEST(ExtractPatternTest, ErasureIgnoresDatabaseItems) {
  const char* pairs[][2] = {
      {"SELECT name FROM head WHERE age > 56",
       "SELECT title FROM book WHERE pages > 3"},
      {"SELECT country, count(*) FROM singer GROUP BY country",
       "SELECT color, count(*) FROM grapes GROUP BY color"},
      {"SELECT winery FROM wine GROUP BY winery ORDER BY sum(cases) DESC LIMIT 3",
       "SELECT team FROM player GROUP BY team ORDER BY sum(goals) ASC LIMIT 9"},
      {"SELECT grape FROM wine WHERE year = 2008 EXCEPT SELECT grape FROM wine WHERE year = 2009",
       "SELECT x FROM y WHERE z = 'a' EXCEPT SELECT p FROM q WHERE r = 'b'"},
  };
  for (const auto& pair : pairs) {
    EXPECT_EQ(ExtractPattern(ParseSql(pair[0])), ExtractPattern(ParseSql(pair[1]))) << pair[0];
  }
}

TEST(ExtractPatternTest, FromNeverAppears) {
  for (const char* sql :
       {"SELECT a FROM t", "SELECT t.a FROM t JOIN u ON t.id = u.tid",
        "SELECT a FROM t WHERE b IN (SELECT c FROM u JOIN v ON u.id = v.uid)"}) {
    std::string p = ExtractPattern(ParseSql(sql)).ToString();
    EXPECT_EQ(p.find("FROM"), std::string::npos) << p;
    EXPECT_EQ(p.find("JOIN"), std::string::npos) << p;
  }
}

class GeneratedRoundTrip : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { sample_ = new std::vector<testing::GeneratedQuery>(
                                     GeneratedSample(3, 2, 11)); }
  static void TearDownTestSuite() { delete sample_; }
  static std::vector<testing::GeneratedQuery>* sample_;
};
std::vector<testing::GeneratedQuery>* GeneratedRoundTrip::sample_ = nullptr;

TEST_F(GeneratedRoundTrip, ParseOfSerializeIsIdentity) {
  ASSERT_GT(sample_->size(), 2000u);
  int failures = 0;
  for (const auto& g : *sample_) {
    Query back = ParseSql(SerializeSql(g.query.ast), g.db->schema.get());
    if (!(back == g.query.ast) && ++failures < 5) ADD_FAILURE() << g.query.sql;
  }
  EXPECT_EQ(failures, 0);
}

TEST_F(GeneratedRoundTrip, PatternIsStable) {
  for (const auto& g : *sample_) {
    EXPECT_EQ(ExtractPattern(ParseSql(SerializeSql(g.query.ast))), ExtractPattern(g.query.ast))
        << g.query.sql;
  }
}

TEST_F(GeneratedRoundTrip, RenamingPreservesPattern) {
  std::mt19937 rng(5);
  for (std::size_t i = 0; i < sample_->size(); i += 7) {
    const Query& q = (*sample_)[i].query.ast;
    // Rewrite the token stream with fresh identifiers and literals; names
    // are renamed consistently so qualified columns still resolve.
    std::map<std::string, std::string> tables;
    std::map<std::string, std::string> columns;
    auto table_name = [&](const std::string& t) {
      auto [it, fresh] = tables.emplace(t, "");
      if (fresh) it->second = "tbl" + std::to_string(tables.size());
      return it->second;
    };
    std::string text;
    for (const SqlToken& t : WriteQuery(q).tokens) {
      std::string s = t.text;
      if (t.type == TokenType::kTable) s = table_name(t.table);
      if (t.type == TokenType::kColumn && s != "*") {
        auto [it, fresh] = columns.emplace(t.column.table + "." + t.column.column, "");
        if (fresh) it->second = "col" + std::to_string(columns.size());
        s = (t.column.table.empty() || s.find('.') == std::string::npos
                 ? ""
                 : table_name(t.column.table) + ".") +
            it->second;
      }
      if (t.type == TokenType::kValue) {
        s = t.literal && t.literal->is_number() ? std::to_string(rng() % 100 + 1)
                                                : "'v" + std::to_string(rng() % 9) + "'";
      }
      if (!text.empty() && t.space_before) text += ' ';
      text += s;
    }
    EXPECT_EQ(ExtractPattern(ParseSql(text)), ExtractPattern(q)) << text;
  }
}

}  // namespace
}  // namespace sqlaug
