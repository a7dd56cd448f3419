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
#include <random>
#include <set>

#include "fixtures.h"
#include "sqlaug/augment.h"
#include "sqlaug/config.h"
#include "sqlaug/dataset.h"
#include "sqlaug/epochs.h"
#include "sqlaug/error.h"
#include "sqlaug/grammar.h"
#include "sqlaug/sql_parser.h"
#include "sqlaug/stats.h"

namespace sqlaug {
namespace {

PlanConfig Plan(Strategy s, int labeled, int generated, int epochs, std::uint64_t seed = 1) {
  PlanConfig c;
  c.strategy = s;
  c.labeled = labeled;
  c.generated = generated;
  c.epochs = epochs;
  c.seed = seed;
  return c;
}

std::vector<int> Range(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

TEST(PlanEpochsTest, SampleExample) {
  std::vector<EpochPlan> plans = PlanEpochs(Plan(Strategy::kSample, 100, 670, 3));
  ASSERT_EQ(plans.size(), 3u);
  for (const EpochPlan& p : plans) {
    EXPECT_EQ(p.labeled_ids, Range(100));
    EXPECT_EQ(p.generated_ids.size(), 100u);
    std::set<int> distinct(p.generated_ids.begin(), p.generated_ids.end());
    EXPECT_EQ(distinct.size(), 100u);
    EXPECT_GE(*distinct.begin(), 0);
    EXPECT_LT(*distinct.rbegin(), 670);
    EXPECT_FALSE(p.with_replacement);
  }
  EXPECT_NE(plans[0].generated_ids, plans[1].generated_ids);
  EXPECT_EQ(plans[2].epoch, 3);
}

TEST(PlanEpochsTest, MergeAndPretrainExamples) {
  for (const EpochPlan& p : PlanEpochs(Plan(Strategy::kMerge, 7, 40, 4))) {
    EXPECT_EQ(p.labeled_ids, Range(7));
    EXPECT_EQ(p.generated_ids, Range(40));
  }
  PlanConfig c = Plan(Strategy::kPretrain, 5, 9, 4);
  c.pretrain_epochs = 2;
  std::vector<EpochPlan> plans = PlanEpochs(c);
  ASSERT_EQ(plans.size(), 4u);
  for (int e = 0; e < 2; ++e) {
    EXPECT_TRUE(plans[e].labeled_ids.empty());
    EXPECT_EQ(plans[e].generated_ids, Range(9));
  }
  for (int e = 2; e < 4; ++e) {
    EXPECT_EQ(plans[e].labeled_ids, Range(5));
    EXPECT_TRUE(plans[e].generated_ids.empty());
  }
  // Default split is half, rounded up.
  std::vector<EpochPlan> odd = PlanEpochs(Plan(Strategy::kPretrain, 5, 9, 3));
  EXPECT_FALSE(odd[1].generated_ids.empty());
  EXPECT_TRUE(odd[2].generated_ids.empty());
}

TEST(PlanEpochsTest, SmallPoolSamplesWithReplacement) {
  std::vector<std::string> warnings;
  std::vector<EpochPlan> plans = PlanEpochs(Plan(Strategy::kSample, 50, 10, 2), &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("SampleLargerThanPool"), std::string::npos);
  for (const EpochPlan& p : plans) {
    EXPECT_TRUE(p.with_replacement);
    EXPECT_EQ(p.generated_ids.size(), 50u);
    for (int id : p.generated_ids) EXPECT_TRUE(id >= 0 && id < 10);
  }
  EXPECT_TRUE(PlanEpochs(Plan(Strategy::kSample, 3, 0, 1))[0].generated_ids.empty());
}

TEST(PlanEpochsTest, StrategyNames) {
  EXPECT_EQ(ParseStrategy("sample"), Strategy::kSample);
  EXPECT_EQ(StrategyName(ParseStrategy("pretrain")), "pretrain");
  try {
    ParseStrategy("mix");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidStrategy);
  }
}

TEST(PlanEpochsTest, PropertiesAcrossRandomSizes) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    int labeled = static_cast<int>(rng() % 60);
    int generated = static_cast<int>(rng() % 200);
    int epochs = static_cast<int>(rng() % 6);
    std::uint64_t seed = rng();
    for (Strategy s : {Strategy::kSample, Strategy::kMerge, Strategy::kPretrain}) {
      std::vector<EpochPlan> plans = PlanEpochs(Plan(s, labeled, generated, epochs, seed));
      ASSERT_EQ(plans.size(), static_cast<std::size_t>(epochs));
      EXPECT_EQ(plans, PlanEpochs(Plan(s, labeled, generated, epochs, seed)));
      bool seen_labeled = false;
      for (const EpochPlan& p : plans) {
        EXPECT_EQ(p.strategy, s);
        switch (s) {
          case Strategy::kSample:
            EXPECT_EQ(p.generated_ids.size(), static_cast<std::size_t>(generated == 0 ? 0 : labeled));
            EXPECT_EQ(p.labeled_ids, Range(labeled));
            if (generated >= labeled) {
              EXPECT_EQ(std::set<int>(p.generated_ids.begin(), p.generated_ids.end()).size(),
                        p.generated_ids.size());
            }
            for (int id : p.generated_ids) EXPECT_TRUE(id >= 0 && id < generated);
            break;
          case Strategy::kMerge:
            EXPECT_EQ(p.generated_ids, Range(generated));
            EXPECT_EQ(p.labeled_ids, Range(labeled));
            break;
          case Strategy::kPretrain:
            EXPECT_TRUE(p.labeled_ids.empty() || p.generated_ids.empty());
            if (!p.labeled_ids.empty()) seen_labeled = true;
            // Phase 1 never follows phase 2.
            if (seen_labeled) EXPECT_TRUE(p.generated_ids.empty());
            break;
        }
      }
    }
  }
}

TEST(PlanEpochsTest, SampleIsReproduciblePerEpoch) {
  std::vector<EpochPlan> three = PlanEpochs(Plan(Strategy::kSample, 20, 100, 3, 42));
  std::vector<EpochPlan> five = PlanEpochs(Plan(Strategy::kSample, 20, 100, 5, 42));
  for (int e = 0; e < 3; ++e) EXPECT_EQ(three[e].generated_ids, five[e].generated_ids);
  EXPECT_NE(three[0].generated_ids, PlanEpochs(Plan(Strategy::kSample, 20, 100, 1, 43))[0].generated_ids);
}

std::vector<Pattern> Patterns(std::initializer_list<const char*> sqls) {
  std::vector<Pattern> out;
  for (const char* s : sqls) out.push_back(ExtractPattern(ParseSql(s)));
  return out;
}

TEST(StatsTest, Examples) {
  std::vector<Pattern> labeled = Patterns({"SELECT a FROM t", "SELECT a FROM t WHERE b = 1",
                                           "SELECT a, b FROM t WHERE b > 1"});
  StatsReport r = ComputeStats(labeled, {});
  EXPECT_EQ(r.labeled.size, 3);
  EXPECT_EQ(r.labeled.distinct_patterns, 3);
  EXPECT_EQ(r.coverage, 0.0);
  ConstructFlags sw;
  sw.select = sw.where = true;
  EXPECT_EQ(r.labeled.constructs, sw);

  std::vector<Pattern> generated = labeled;
  generated.push_back(ExtractPattern(ParseSql("SELECT a FROM t ORDER BY a DESC")));
  generated.push_back(generated[0]);
  StatsReport full = ComputeStats(labeled, generated);
  EXPECT_EQ(full.coverage, 1.0);
  EXPECT_EQ(full.generated.size, 5);
  EXPECT_EQ(full.generated.distinct_patterns, 4);
  EXPECT_EQ(full.shared_patterns, 3);
  EXPECT_TRUE(full.generated.constructs.order);

  StatsReport half = ComputeStats(labeled, Patterns({"SELECT a FROM t"}));
  EXPECT_NEAR(half.coverage, 1.0 / 3, 1e-12);
}

TEST(StatsTest, Markdown) {
  StatsReport r = ComputeStats(Patterns({"SELECT a FROM t WHERE b = 1"}),
                               Patterns({"SELECT a FROM t WHERE b = 1", "SELECT count(*) FROM t"}));
  std::string md = r.ToMarkdown("Ours");
  EXPECT_NE(md.find("| Dataset | Size | Patterns | Coverage | Select | Where | Group"),
            std::string::npos);
  EXPECT_NE(md.find("| Labeled | 1 | 1 | - | ✓ | ✓ | ✗"), std::string::npos) << md;
  EXPECT_NE(md.find("| Ours | 2 | 2 | 100.0% |"), std::string::npos) << md;
}

TEST(ConfigTest, ParseAndDescribe) {
  RunConfig c = ParseConfig("# run\nseed = 9\nthreshold=0.5\n\nworkers = 3\nstrategy = merge\n"
                            "max_depth = 6\nrandom_variants = false\n");
  EXPECT_EQ(c.augment.seed, 9u);
  EXPECT_EQ(c.augment.threshold, 0.5);
  EXPECT_EQ(c.augment.workers, 3);
  EXPECT_EQ(c.augment.max_level.depth_cap, 6);
  EXPECT_FALSE(c.augment.random_variants);
  EXPECT_EQ(c.plan.strategy, Strategy::kMerge);
  RunConfig defaults = ParseConfig("");
  EXPECT_EQ(defaults.augment.threshold, 0.8);
  // The description is itself a valid configuration with the same values.
  EXPECT_EQ(DescribeConfig(ParseConfig(DescribeConfig(c))), DescribeConfig(c));
  for (const char* bad : {"nonsense\n", "colour = red\n", "seed = x\n", "random_variants = maybe\n"}) {
    try {
      ParseConfig(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kFormat) << bad;
    }
  }
}

TEST(DatasetTest, RoundTrip) {
  std::vector<AugmentedExample> ex = {
      {"a", "Find \"x\".", "SELECT x FROM t", "SELECT A", 3, 0xFFFFFFFFFFFFFFFFull, "template"},
      {"b", "Ünïcode?", "SELECT y FROM t", "SELECT A", 0, 1, "template"}};
  std::string jsonl = ToJsonl(ex);
  EXPECT_EQ(ParseAugmented(jsonl), ex);
  EXPECT_EQ(jsonl.substr(0, 10), "{\"db_id\":\"");
  std::filesystem::path dir = testing::ScratchDir("dataset");
  WriteAugmented(ex, dir / "x.jsonl");
  EXPECT_EQ(LoadAugmented(dir / "x.jsonl"), ex);
  EXPECT_TRUE(ParseAugmented("").empty());
}

std::vector<LabeledExample> TenPatternCorpus() {
  std::vector<LabeledExample> out;
  for (const char* sql : {
           "SELECT Name FROM singer",
           "SELECT Name FROM singer WHERE Age > 30",
           "SELECT count(*) FROM singer",
           "SELECT Name, Age FROM singer",
           "SELECT Name FROM singer ORDER BY Age DESC",
           "SELECT Name FROM singer ORDER BY Age DESC LIMIT 3",
           "SELECT Country, count(*) FROM singer GROUP BY Country",
           "SELECT Name FROM singer WHERE Age > 30 AND Country = 'France'",
           "SELECT max(Age), min(Age) FROM singer",
           "SELECT Name FROM singer WHERE Age > (SELECT avg(Age) FROM singer)",
       }) {
    out.push_back({"concert_singer", "q", sql});
  }
  return out;
}

std::vector<Database> TwoDatabases() {
  return {testing::FixtureDatabase("concert_singer"), testing::FixtureDatabase("wta_1")};
}

AugmentConfig SmallConfig() {
  AugmentConfig c;
  c.seed = 3;
  c.max_fills_per_sketch_per_db = 1;
  return c;
}

TEST(AugmentTest, TwoDatabasesReachCoverage) {
  std::vector<LabeledExample> corpus = TenPatternCorpus();
  std::set<std::string> patterns;
  for (const LabeledExample& ex : corpus) patterns.insert(ExtractPattern(ParseSql(ex.sql)).ToString());
  ASSERT_EQ(patterns.size(), 10u);
  TemplateTranslator t = testing::DefaultTranslator();
  AugmentResult r = Augment(TwoDatabases(), LoadGrammar(DefaultGrammarPath()), corpus, t, SmallConfig());
  EXPECT_FALSE(r.examples.empty());
  EXPECT_GE(r.stats.sketch_coverage, 0.8);
  EXPECT_EQ(r.stats.labeled, 10);
  EXPECT_EQ(r.stats.per_db.size(), 2u);
  EXPECT_EQ(r.stats.self_check_failures, 0);
  EXPECT_EQ(r.stats.data.generated.size, static_cast<int>(r.examples.size()));
  std::set<std::string> dbs;
  for (const AugmentedExample& ex : r.examples) {
    dbs.insert(ex.db_id);
    EXPECT_EQ(ExtractPattern(ParseSql(ex.sql)).ToString(), ex.pattern);
    EXPECT_EQ(ex.translator_id, t.id());
    EXPECT_FALSE(ex.question.empty());
  }
  EXPECT_EQ(dbs.size(), 2u);
  EXPECT_FALSE(r.stats.Summary().empty());
}

TEST(AugmentTest, NoDatabasesWarns) {
  TemplateTranslator t = testing::DefaultTranslator();
  AugmentResult r = Augment({}, LoadGrammar(DefaultGrammarPath()), TenPatternCorpus(), t, SmallConfig());
  EXPECT_TRUE(r.examples.empty());
  EXPECT_FALSE(r.stats.warnings.empty());
}

TEST(AugmentTest, DeterministicAcrossRunsAndWorkers) {
  TemplateTranslator t = testing::DefaultTranslator();
  Grammar g = LoadGrammar(DefaultGrammarPath());
  AugmentConfig c = SmallConfig();
  std::string first = ToJsonl(Augment(TwoDatabases(), g, TenPatternCorpus(), t, c).examples);
  std::string again = ToJsonl(Augment(TwoDatabases(), g, TenPatternCorpus(), t, c).examples);
  c.workers = 3;
  std::string threaded = ToJsonl(Augment(TwoDatabases(), g, TenPatternCorpus(), t, c).examples);
  EXPECT_EQ(first, again);
  EXPECT_EQ(first, threaded);
  c.seed = 4;
  EXPECT_NE(first, ToJsonl(Augment(TwoDatabases(), g, TenPatternCorpus(), t, c).examples));
}

}  // namespace
}  // namespace sqlaug
