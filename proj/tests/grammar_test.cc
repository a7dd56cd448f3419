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

#include <algorithm>
#include <chrono>
#include <set>

#include "fixtures.h"
#include "sqlaug/coverage.h"
#include "sqlaug/error.h"
#include "sqlaug/grammar.h"
#include "sqlaug/sketch.h"
#include "sqlaug/sql_parser.h"

namespace sqlaug {
namespace {

Grammar Default() { return LoadGrammar(DefaultGrammarPath()); }

std::vector<Pattern> Patterns(std::initializer_list<const char*> texts) {
  std::vector<Pattern> out;
  for (const char* t : texts) out.push_back(ParsePattern(t));
  return out;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// Three levels of the schedule, each adding known patterns: (3,2) reaches
// SELECT A / CALC / C, (4,2) the V and OP forms, (4,3) the two-item forms.
constexpr const char* kLevelGrammar = R"(
SQLs -> Q
Q -> SELECT A | SELECT CALC | SELECT X | SELECT Y
Q -> SELECT A A | SELECT A C | SELECT A V
X -> C
Y -> Z | Z DIR
Z -> V | OP
)";

TEST(LoadGrammarTest, DefaultHasOrderRule) {
  Grammar g = Default();
  EXPECT_EQ(g.start(), "SQLs");
  EXPECT_NE(g.FindRule("Order", {"ORDER_BY", "C", "Dir"}), nullptr);
  EXPECT_NE(g.FindRule("SQLs", {"SQL"}), nullptr);
  EXPECT_NE(g.FindRule("Select", {"SELECT", "A"}), nullptr);
}

TEST(LoadGrammarTest, DefaultCoversEveryConstructFamily) {
  ConstructFlags all;
  for (const SketchTree& t : testing::DefaultSketches()) all |= ConstructsOf(t.Flatten());
  EXPECT_TRUE(all.select && all.where && all.group && all.having && all.order &&
              all.calculation && all.nested && all.multi_sql);
}

TEST(LoadGrammarTest, UndeclaredSymbol) {
  try {
    ParseGrammar("SQLs -> SELECT Foo\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndeclaredSymbol);
    EXPECT_NE(std::string(e.what()).find("Foo"), std::string::npos);
  }
}

TEST(LoadGrammarTest, UnproductiveNonterminal) {
  EXPECT_EQ(CodeOf([] { ParseGrammar("SQLs -> SELECT A | Loop\nLoop -> SELECT Loop\n"); }),
            ErrorCode::kUnproductiveNonterminal);
}

TEST(LoadGrammarTest, MalformedLineAndMissingStart) {
  EXPECT_EQ(CodeOf([] { ParseGrammar("SQLs SELECT A\n"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseGrammar("# only a comment\nQ -> SELECT A\n"); }), ErrorCode::kParse);
}

TEST(LoadGrammarTest, CommentsAndAlternatives) {
  Grammar g = ParseGrammar("# c\nSQLs -> SELECT A | SELECT AGG A  # trailing\n");
  EXPECT_EQ(g.rules().size(), 2u);
  std::vector<std::string> terminals = g.terminals();
  EXPECT_EQ(std::set<std::string>(terminals.begin(), terminals.end()),
            (std::set<std::string>{"A", "AGG", "SELECT"}));
}

TEST(EnumerateSketchesTest, SmallestLevelOfDefault) {
  std::vector<SketchTree> trees = EnumerateSketches(Default(), {3, 2});
  std::set<std::string> patterns;
  for (const SketchTree& t : trees) {
    patterns.insert(t.Flatten().ToString());
    EXPECT_LE(t.depth, 3);
    EXPECT_LE(t.breadth, 2);
    EXPECT_FALSE(ConstructsOf(t.Flatten()).nested);
  }
  EXPECT_TRUE(patterns.count("SELECT A"));
}

TEST(EnumerateSketchesTest, EmptyLevelIsExhausted) {
  EXPECT_EQ(CodeOf([] { EnumerateSketches(Default(), {0, 0}); }), ErrorCode::kExhausted);
}

TEST(EnumerateSketchesTest, HardCap) {
  EXPECT_EQ(CodeOf([] { EnumerateSketches(Default(), {8, 6}, 100); }), ErrorCode::kCapExceeded);
}

TEST(EnumerateSketchesTest, DeterministicAndDuplicateFree) {
  Grammar g = Default();
  std::vector<SketchTree> a = EnumerateSketches(g, {5, 4});
  std::vector<SketchTree> b = EnumerateSketches(g, {5, 4});
  EXPECT_EQ(a, b);
  std::set<std::string> seen;
  for (const SketchTree& t : a) EXPECT_TRUE(seen.insert(t.ToString()).second) << t.ToString();
  EXPECT_EQ(a.size(), CountSketches(g, {5, 4}));
}

void RulePreorder(const SketchNode& n, std::vector<int>& out) {
  if (n.is_leaf()) return;
  out.push_back(n.rule);
  for (const SketchNode& c : n.children) RulePreorder(c, out);
}

TEST(EnumerateSketchesTest, CanonicalRuleIndexOrder) {
  std::vector<std::vector<int>> keys;
  for (const SketchTree& t : EnumerateSketches(Default(), {5, 4})) {
    keys.emplace_back();
    RulePreorder(t.root, keys.back());
  }
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

// Independent enumeration: every derivation from `symbol` with at most
// `depth` edges, rendered in the bracket form of SketchTree::ToString.
struct Derivation {
  std::string text;
  int breadth;
};

std::vector<Derivation> Derive(const Grammar& g, const std::string& symbol, int depth) {
  if (!g.IsNonterminal(symbol)) return {{symbol, 0}};
  std::vector<Derivation> out;
  if (depth == 0) return out;
  for (int r : g.RulesFor(symbol)) {
    const ProductionRule& rule = g.rules()[r];
    std::vector<Derivation> partial = {{"(" + symbol, static_cast<int>(rule.rhs.size())}};
    for (const std::string& s : rule.rhs) {
      std::vector<Derivation> next;
      for (const Derivation& p : partial) {
        for (const Derivation& c : Derive(g, s, depth - 1)) {
          next.push_back({p.text + " " + c.text, std::max(p.breadth, c.breadth)});
        }
      }
      partial = std::move(next);
    }
    for (Derivation& p : partial) out.push_back({p.text + ")", p.breadth});
  }
  return out;
}

TEST(EnumerateSketchesTest, MatchesBruteForceAtSmallDepth) {
  Grammar g = Default();
  for (int depth = 1; depth <= 3; ++depth) {
    for (int breadth = 1; breadth <= 4; ++breadth) {
      std::multiset<std::string> expected;
      for (const Derivation& d : Derive(g, g.start(), depth)) {
        if (d.breadth <= breadth) expected.insert(d.text);
      }
      std::multiset<std::string> got;
      if (!expected.empty()) {
        for (const SketchTree& t : EnumerateSketches(g, {depth, breadth})) got.insert(t.ToString());
      } else {
        EXPECT_THROW(EnumerateSketches(g, {depth, breadth}), Error);
      }
      EXPECT_EQ(got, expected) << depth << "," << breadth;
    }
  }
}

TEST(EnumerateSketchesTest, SoundnessAgainstRecognizer) {
  Grammar g = Default();
  for (const SketchTree& t : EnumerateSketches(g, {5, 4})) {
    EXPECT_TRUE(Recognizes(g, t.Flatten())) << t.ToString();
    EXPECT_EQ(t.depth, TreeDepth(t.root));
    EXPECT_EQ(t.breadth, TreeBreadth(t.root));
  }
  EXPECT_FALSE(Recognizes(g, ParsePattern("SELECT WHERE")));
  EXPECT_FALSE(Recognizes(g, ParsePattern("SELECT A LIMIT V")));
  EXPECT_TRUE(Recognizes(g, ParsePattern("SELECT A WHERE C OP NESTED_OPEN SELECT AGG A "
                                         "NESTED_CLOSE")));
}

TEST(CoverageTest, Definition) {
  std::vector<Pattern> corpus;
  std::set<Pattern> generated;
  for (int i = 0; i < 10; ++i) {
    Pattern p;
    p.tokens.assign(i + 1, PatternToken::kA);
    p.tokens.insert(p.tokens.begin(), PatternToken::kSelect);
    corpus.push_back(p);
    corpus.push_back(p);  // multiplicity does not count
    if (i < 8) generated.insert(p);
  }
  EXPECT_DOUBLE_EQ(Coverage(generated, corpus), 0.8);
  std::set<Pattern> all(corpus.begin(), corpus.end());
  EXPECT_DOUBLE_EQ(Coverage(all, corpus), 1.0);
  EXPECT_EQ(CodeOf([&] { Coverage(all, {}); }), ErrorCode::kEmptyCorpus);
}

TEST(CoverageTest, SelectWhereCorpusFullyCoveredAtDepthFour) {
  std::vector<Pattern> corpus =
      Patterns({"SELECT A", "SELECT A WHERE C OP V", "SELECT AGG A WHERE C OP V",
                "SELECT CALC WHERE C OP V", "SELECT AGG A"});
  std::set<Pattern> generated;
  for (const SketchTree& t : EnumerateSketches(Default(), {4, 3})) generated.insert(t.Flatten());
  EXPECT_DOUBLE_EQ(Coverage(generated, corpus), 1.0);
}

TEST(GenerateUntilCoverageTest, StopsAtThirdLevel) {
  Grammar g = ParseGrammar(kLevelGrammar);
  std::vector<Pattern> corpus = Patterns(
      {"SELECT A", "SELECT CALC", "SELECT C", "SELECT V", "SELECT OP", "SELECT V DIR",
       "SELECT A A", "SELECT A C", "SELECT A V", "SELECT A WHERE C OP V"});
  CoverageResult r = GenerateUntilCoverage(g, corpus, {});
  ASSERT_EQ(r.levels.size(), 3u);
  EXPECT_EQ(r.levels[0].level, (ComplexityLevel{3, 2}));
  EXPECT_EQ(r.levels[1].level, (ComplexityLevel{4, 2}));
  EXPECT_EQ(r.levels[2].level, (ComplexityLevel{4, 3}));
  EXPECT_DOUBLE_EQ(r.levels[0].coverage, 0.3);
  EXPECT_DOUBLE_EQ(r.levels[1].coverage, 0.6);
  EXPECT_DOUBLE_EQ(r.levels[2].coverage, 0.9);
  EXPECT_DOUBLE_EQ(r.coverage, 0.9);
  EXPECT_EQ(r.final_level, (ComplexityLevel{4, 3}));
}

TEST(GenerateUntilCoverageTest, SinglePatternStopsAtFirstLevel) {
  CoverageResult r = GenerateUntilCoverage(Default(), Patterns({"SELECT A"}), {});
  EXPECT_EQ(r.levels.size(), 1u);
  EXPECT_DOUBLE_EQ(r.coverage, 1.0);
  EXPECT_EQ(r.final_level, (ComplexityLevel{3, 2}));
}

TEST(GenerateUntilCoverageTest, UnreachablePatternExceedsCaps) {
  CoverageConfig cfg;
  cfg.threshold = 1.0;
  cfg.max = {5, 4};
  try {
    GenerateUntilCoverage(Default(), Patterns({"SELECT A", "SELECT A LIMIT V"}), cfg);
    FAIL();
  } catch (const CapExceededBeforeThresholdError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceededBeforeThreshold);
    EXPECT_DOUBLE_EQ(e.partial().coverage, 0.5);
    EXPECT_FALSE(e.partial().sketches.empty());
    EXPECT_EQ(e.partial().final_level, (ComplexityLevel{5, 4}));
  }
}

TEST(GenerateUntilCoverageTest, HardCapStopsEarlyWithPartialResult) {
  CoverageConfig cfg;
  cfg.hard_cap = 200;
  try {
    GenerateUntilCoverage(Default(), Patterns({"SELECT A WHERE C OP NESTED_OPEN SELECT AGG A "
                                               "NESTED_CLOSE"}),
                          cfg);
    FAIL();
  } catch (const CapExceededBeforeThresholdError& e) {
    EXPECT_FALSE(e.partial().sketches.empty());
    EXPECT_DOUBLE_EQ(e.partial().coverage, 0.0);
  }
}

TEST(GenerateUntilCoverageTest, EmptyCorpusAndBadThreshold) {
  EXPECT_EQ(CodeOf([] { GenerateUntilCoverage(Default(), {}, {}); }), ErrorCode::kEmptyCorpus);
  CoverageConfig cfg;
  cfg.threshold = 0;
  EXPECT_EQ(CodeOf([&] { GenerateUntilCoverage(Default(), Patterns({"SELECT A"}), cfg); }),
            ErrorCode::kInvalidArgument);
}

TEST(GenerateUntilCoverageTest, MonotoneAndDeduplicated) {
  std::vector<Pattern> corpus;
  for (const LabeledExample& ex : testing::FixtureLabeled()) {
    corpus.push_back(ExtractPattern(ParseSql(ex.sql)));
  }
  CoverageResult r = GenerateUntilCoverage(Default(), corpus, {});
  for (std::size_t i = 1; i < r.levels.size(); ++i) {
    EXPECT_GE(r.levels[i].coverage, r.levels[i - 1].coverage);
  }
  EXPECT_GE(r.coverage, 0.8);
  std::set<Pattern> seen;
  for (const SketchTree& t : r.sketches) EXPECT_TRUE(seen.insert(t.Flatten()).second);
}

TEST(GenerateUntilCoverageTest, ProducesUnseenPatterns) {
  std::vector<Pattern> corpus =
      Patterns({"SELECT A", "SELECT A WHERE C OP V", "SELECT A ORDER_BY C DIR"});
  CoverageResult r = GenerateUntilCoverage(Default(), corpus, {});
  std::set<Pattern> generated;
  for (const SketchTree& t : r.sketches) generated.insert(t.Flatten());
  std::set<Pattern> seen(corpus.begin(), corpus.end());
  EXPECT_TRUE(std::includes(generated.begin(), generated.end(), seen.begin(), seen.end()));
  EXPECT_GT(generated.size(), seen.size());
}

TEST(NextLevelTest, Schedule) {
  ComplexityLevel l{3, 2};
  std::vector<ComplexityLevel> seen = {l};
  while (NextLevel(l, {8, 6})) seen.push_back(l);
  EXPECT_EQ(seen.front(), (ComplexityLevel{3, 2}));
  EXPECT_EQ(seen.back(), (ComplexityLevel{8, 6}));
  for (std::size_t i = 1; i < seen.size(); ++i) {
    int grew = (seen[i].depth_cap - seen[i - 1].depth_cap) +
               (seen[i].breadth_cap - seen[i - 1].breadth_cap);
    EXPECT_EQ(grew, 1);
  }
}

}  // namespace
}  // namespace sqlaug
