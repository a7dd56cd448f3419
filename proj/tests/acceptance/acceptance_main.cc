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

// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.h"
#include "properties.h"
#include "span_oracle.h"
#include "sqlite_oracle.h"
#include "sqlaug/alignment.h"
#include "sqlaug/augment.h"
#include "sqlaug/clause.h"
#include "sqlaug/corpus.h"
#include "sqlaug/coverage.h"
#include "sqlaug/dataset.h"
#include "sqlaug/epochs.h"
#include "sqlaug/error.h"
#include "sqlaug/evaluator.h"
#include "sqlaug/grammar.h"
#include "sqlaug/sql_parser.h"

namespace sqlaug {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

int failures = 0;

void Report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Runs a criterion, turning an escaped exception into a FAIL line.
template <typename Fn>
void Check(int id, Fn fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    Report(id, false, std::string("exception: ") + e.what());
  }
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

void CoverageStopping() {
  Grammar g = ParseGrammar(R"(
SQLs -> Q
Q -> SELECT A | SELECT CALC | SELECT X | SELECT Y
Q -> SELECT A A | SELECT A C | SELECT A V
X -> C
Y -> Z | Z DIR
Z -> V | OP
)");
  std::vector<Pattern> corpus;
  for (const char* p : {"SELECT A", "SELECT CALC", "SELECT C", "SELECT V", "SELECT OP",
                        "SELECT V DIR", "SELECT A A", "SELECT A C", "SELECT A V",
                        "SELECT A WHERE C OP V"}) {
    corpus.push_back(ParsePattern(p));
  }
  Clock::time_point start = Clock::now();
  CoverageResult r = GenerateUntilCoverage(g, corpus, {});
  double secs = Seconds(start);
  std::vector<double> cumulative;
  for (const LevelReport& l : r.levels) cumulative.push_back(l.coverage);
  bool ok = cumulative == std::vector<double>{0.3, 0.6, 0.9} && r.coverage == 0.9 && secs < 1.0;
  Report(1, ok,
         Fmt("stopped after %.0f levels at coverage %.2f in %.3f s", double(r.levels.size()),
             r.coverage, secs));
}

struct AugmentRun {
  AugmentResult result;
  double seconds = 0;
  std::string jsonl;
};

AugmentRun RunAugment(int workers) {
  AugmentConfig config;
  config.seed = 1;
  config.workers = workers;
  TemplateTranslator t = testing::DefaultTranslator();
  Grammar g = LoadGrammar(DefaultGrammarPath());
  AugmentRun run;
  Clock::time_point start = Clock::now();
  run.result = Augment(testing::FixtureDatabases(), g, testing::FixtureLabeled(), t, config);
  run.seconds = Seconds(start);
  std::filesystem::path path = testing::ScratchDir("acceptance_w" + std::to_string(workers)) / "aug.jsonl";
  WriteAugmented(run.result.examples, path);
  run.jsonl = testing::ReadFile(path);
  return run;
}

void Executability(const AugmentRun& run) {
  const std::vector<AugmentedExample>& ex = run.result.examples;
  std::set<std::string> dbs;
  int ok_count = 0;
  for (const AugmentedExample& e : ex) {
    const Database& db = testing::FixtureDatabase(e.db_id);
    try {
      Execute(ParseSql(e.sql, db.schema.get()), *db.content);
      ++ok_count;
    } catch (const Error&) {
    }
    dbs.insert(e.db_id);
  }
  bool ok = ex.size() >= 5000 && dbs.size() >= 5 && ok_count == static_cast<int>(ex.size()) &&
            run.seconds < 60.0;
  Report(2, ok,
         Fmt("%.0f of %.0f examples execute; ", ok_count, double(ex.size())) +
             Fmt("%.0f schemas; single-threaded augment took %.1f s", double(dbs.size()), run.seconds));
}

void PatternFidelity(const AugmentRun& run) {
  std::vector<Pattern> labeled;
  std::map<std::string, std::shared_ptr<const Schema>> schemas = testing::FixtureSchemaMap();
  for (const LabeledExample& ex : testing::FixtureLabeled()) {
    try {
      labeled.push_back(ExtractPattern(ParseSql(ex.sql, schemas.at(ex.db_id).get())));
    } catch (const Error&) {
    }
  }
  CoverageResult cov = GenerateUntilCoverage(LoadGrammar(DefaultGrammarPath()), labeled, {});
  int mismatches = 0;
  for (const AugmentedExample& e : run.result.examples) {
    Pattern actual = ExtractPattern(ParseSql(e.sql, schemas.at(e.db_id).get()));
    bool same = e.sketch_id >= 0 && e.sketch_id < static_cast<int>(cov.sketches.size()) &&
                cov.sketches[e.sketch_id].Flatten() == actual && actual.ToString() == e.pattern;
    if (!same) ++mismatches;
  }
  Report(3, mismatches == 0 && !run.result.examples.empty(),
         Fmt("%.0f pattern mismatches over %.0f examples", mismatches,
             double(run.result.examples.size())));
}

void EvaluatorOracle() {
  std::vector<testing::GeneratedQuery> sample = testing::GeneratedSample(2, 1, 2024);
  std::map<std::string, std::unique_ptr<testing::SqliteOracle>> oracles;
  for (const Database& db : testing::FixtureDatabases()) {
    oracles[db.schema->db_id] = std::make_unique<testing::SqliteOracle>(*db.content);
  }
  std::vector<std::size_t> order(sample.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), std::mt19937_64(500));
  int compared = 0, mismatches = 0, reference_errors = 0;
  for (std::size_t i : order) {
    if (compared >= 500) break;
    const testing::GeneratedQuery& g = sample[i];
    ResultTable mine;
    try {
      mine = Execute(g.query.ast, *g.db->content);
    } catch (const Error&) {
      continue;  // not executable here; the filter would drop it
    }
    ++compared;
    testing::OracleResult r = oracles[g.db->schema->db_id]->Compare(g.query.ast, mine);
    if (r.verdict == testing::Verdict::kMismatch) ++mismatches;
    if (r.verdict == testing::Verdict::kReferenceError) ++reference_errors;
  }
  Report(4, compared == 500 && mismatches == 0 && reference_errors == 0,
         Fmt("%.0f queries compared with SQLite, %.0f mismatches, %.0f reference errors", compared,
             mismatches, reference_errors));
}

void Decomposition() {
  struct Case {
    const char* sql;
    std::vector<std::string> kinds;
  };
  const std::vector<Case> cases = {
      {"SELECT name FROM head WHERE born_state != 'California'", {"SELECT", "WHERE"}},
      {"SELECT name FROM Wine WHERE Price > (SELECT max(Price) FROM Wine)",
       {"SELECT", "WHERE+NESTED_SELECT"}},
      {"SELECT c, count(*) FROM t GROUP BY c HAVING count(*) > 3", {"SELECT", "GROUP_BY+HAVING"}},
      {"SELECT a FROM t ORDER BY a DESC LIMIT 5", {"SELECT", "ORDER_BY+LIMIT"}},
      {"SELECT c, count(*) FROM t GROUP BY c", {"SELECT+GROUP_BY"}},
      {"SELECT name FROM head WHERE age > 50 INTERSECT SELECT name FROM head WHERE born_state = "
       "'Ohio'",
       {"SELECT", "WHERE", "SET_OP", "SELECT", "WHERE"}},
  };
  int matched = 0;
  std::string first_bad;
  for (const Case& c : cases) {
    std::vector<std::string> kinds;
    for (const Clause& cl : Decompose(ParseSql(c.sql))) kinds.emplace_back(ClauseKindName(cl.kind));
    if (kinds == c.kinds) {
      ++matched;
    } else if (first_bad.empty()) {
      first_bad = std::string("; mismatch on ") + c.sql;
    }
  }
  // The nested clause must hold the outer comparison and the inner query.
  std::vector<Clause> wine = Decompose(ParseSql(cases[1].sql));
  bool nested_text = wine.size() == 2 &&
                     wine[1].Text().find("FROM Wine WHERE Price >") != std::string::npos &&
                     wine[1].Text().find("SELECT max(Price) FROM Wine") != std::string::npos;
  Report(5, matched == 6 && nested_text,
         Fmt("%.0f of 6 cases decompose as expected", matched) + first_bad);
}

void CompositionOrder(const AugmentRun& run) {
  TemplateTranslator t = testing::DefaultTranslator();
  AugmentConfig config;
  config.seed = 1;
  int violations = 0, rebuilt_differs = 0;
  std::string example;
  for (const AugmentedExample& e : run.result.examples) {
    const Schema& schema = *testing::FixtureDatabase(e.db_id).schema;
    ComposedQuestion q =
        GeneratedQuestion(ParseSql(e.sql, &schema), schema, e.sketch_id, e.fill_seed, t, config);
    if (q.text != e.question) ++rebuilt_differs;
    if (std::optional<std::string> v = testing::FragmentOrderViolation(q)) {
      if (violations++ == 0) example = "; first: " + e.sql + ": " + *v;
    }
  }
  Report(6, violations == 0 && rebuilt_differs == 0 && !run.result.examples.empty(),
         Fmt("%.0f order violations, %.0f questions not reproduced, over %.0f examples", violations,
             rebuilt_differs, double(run.result.examples.size())) +
             example);
}

void AlignmentMinimality() {
  std::mt19937_64 rng(7);
  int agree = 0;
  const int instances = 200;
  const Schema& schema = *testing::FixtureDatabase("wta_1").schema;
  // Each instance: a one-clause WHERE query whose column and value links are
  // scattered over a random filler question, possibly several times each.
  for (int i = 0; i < instances; ++i) {
    int length = 12 + static_cast<int>(rng() % 25);  // room for 9 linked tokens
    std::vector<std::string> tokens(length, "blah");
    int value = 100 + static_cast<int>(rng() % 900);
    int col_copies = 1 + static_cast<int>(rng() % 3);
    int val_copies = 1 + static_cast<int>(rng() % 3);
    std::set<int> used;
    auto place = [&](int width) {
      for (;;) {
        int b = static_cast<int>(rng() % (length - width + 1));
        bool free = true;
        for (int k = b; k < b + width; ++k) free &= !used.count(k);
        if (!free) continue;
        for (int k = b; k < b + width; ++k) used.insert(k);
        return b;
      }
    };
    for (int c = 0; c < col_copies; ++c) {
      int b = place(2);
      tokens[b] = "loser";
      tokens[b + 1] = "age";
    }
    for (int c = 0; c < val_copies; ++c) tokens[place(1)] = std::to_string(value);
    Query q = ParseSql("SELECT draw_size FROM matches WHERE loser_age > " + std::to_string(value), &schema);
    TokenAlignment alignment = LinkSchema(tokens, q, &schema);
    std::vector<ClausePair> pairs = ExtractPairs(tokens, q, alignment, &schema);
    const ClausePair* where = nullptr;
    for (const ClausePair& p : pairs) {
      if (p.clause.kind == ClauseKind::kWhere) where = &p;
    }
    std::vector<Clause> clauses = Decompose(q);
    std::vector<ClauseElement> elements = ClauseElements(clauses[1], &schema);
    std::vector<std::vector<int>> element_links(elements.size());
    for (std::size_t e = 0; e < elements.size(); ++e) {
      for (int l = 0; l < static_cast<int>(alignment.links.size()); ++l) {
        if (alignment.links[l].element == elements[e]) element_links[e].push_back(l);
      }
    }
    auto oracle = testing::BruteForceMinimalSpan(length, element_links, alignment.links);
    if (where && oracle && std::pair(where->begin, where->end) == *oracle &&
        !testing::HasCoveringSubSpan(where->begin, where->end, element_links, alignment.links)) {
      ++agree;
    }
  }
  Report(7, agree == instances,
         Fmt("%.0f of %.0f instances match the brute-force minimal span", agree, instances));
}

void AlignmentRate() {
  MiningResult r = MineCorpus(testing::FixtureLabeled(), testing::FixtureSchemaMap());
  Report(8, testing::FixtureLabeled().size() >= 30 && r.stats.AlignmentRate() >= 0.70,
         Fmt("%.0f of %.0f clauses aligned, rate %.3f", r.stats.aligned, r.stats.clauses,
             r.stats.AlignmentRate()) +
             Fmt(" over %.0f labeled pairs", double(testing::FixtureLabeled().size())));
}

void StrategyPlans() {
  std::mt19937_64 rng(9);
  int checked = 0, bad = 0;
  for (int round = 0; round < 300; ++round) {
    PlanConfig c;
    c.labeled = 1 + static_cast<int>(rng() % 80);
    c.generated = c.labeled + static_cast<int>(rng() % 500);
    c.epochs = 1 + static_cast<int>(rng() % 6);
    c.seed = rng();
    for (Strategy s : {Strategy::kSample, Strategy::kMerge, Strategy::kPretrain}) {
      c.strategy = s;
      std::vector<EpochPlan> plans = PlanEpochs(c);
      bool ok = plans.size() == static_cast<std::size_t>(c.epochs);
      bool phase2 = false;
      for (const EpochPlan& p : plans) {
        switch (s) {
          case Strategy::kSample:
            ok &= p.generated_ids.size() == static_cast<std::size_t>(c.labeled) &&
                  std::set<int>(p.generated_ids.begin(), p.generated_ids.end()).size() ==
                      p.generated_ids.size();
            break;
          case Strategy::kMerge:
            ok &= p.generated_ids.size() == static_cast<std::size_t>(c.generated) &&
                  p.labeled_ids.size() == static_cast<std::size_t>(c.labeled);
            break;
          case Strategy::kPretrain:
            ok &= p.labeled_ids.empty() != p.generated_ids.empty();
            if (!p.labeled_ids.empty()) phase2 = true;
            ok &= !(phase2 && !p.generated_ids.empty());
            break;
        }
      }
      ok &= plans == PlanEpochs(c);
      ++checked;
      if (!ok) ++bad;
    }
  }
  Report(9, bad == 0, Fmt("%.0f of %.0f random plans violate their strategy", bad, checked));
}

void Determinism(const AugmentRun& first) {
  AugmentRun again = RunAugment(1);
  AugmentRun threaded = RunAugment(4);
  bool ok = first.jsonl == again.jsonl && first.jsonl == threaded.jsonl && !first.jsonl.empty();
  Report(10, ok,
         Fmt("outputs of %.0f bytes; rerun identical: ",
             double(first.jsonl.size())) +
             (first.jsonl == again.jsonl ? "yes" : "no") + "; 4 workers identical: " +
             (first.jsonl == threaded.jsonl ? "yes" : "no"));
}

void Ratio(const AugmentRun& run) {
  double labeled = static_cast<double>(testing::FixtureLabeled().size());
  double generated = static_cast<double>(run.result.examples.size());
  Report(11, generated >= 3 * labeled,
         Fmt("%.0f generated vs %.0f labeled (%.1fx)", generated, labeled, generated / labeled));
}

}  // namespace
}  // namespace sqlaug

int main() {
  using namespace sqlaug;
  Check(1, CoverageStopping);
  AugmentRun run;
  bool have_run = false;
  try {
    run = RunAugment(1);
    have_run = true;
  } catch (const std::exception& e) {
    for (int id : {2, 3, 6, 10, 11}) Report(id, false, std::string("augment failed: ") + e.what());
  }
  if (have_run) Check(2, [&] { Executability(run); });
  if (have_run) Check(3, [&] { PatternFidelity(run); });
  Check(4, EvaluatorOracle);
  Check(5, Decomposition);
  if (have_run) Check(6, [&] { CompositionOrder(run); });
  Check(7, AlignmentMinimality);
  Check(8, AlignmentRate);
  Check(9, StrategyPlans);
  if (have_run) Check(10, [&] { Determinism(run); });
  if (have_run) Check(11, [&] { Ratio(run); });
  return failures == 0 ? 0 : 1;
}
