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

// Command-line front end: sketch generation, filling, augmentation, question
// generation, corpus mining, epoch planning, statistics and query execution.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqlaug/augment.h"
#include "sqlaug/clause.h"
#include "sqlaug/config.h"
#include "sqlaug/corpus.h"
#include "sqlaug/coverage.h"
#include "sqlaug/epochs.h"
#include "sqlaug/error.h"
#include "sqlaug/evaluator.h"
#include "sqlaug/generator.h"
#include "sqlaug/grammar.h"
#include "sqlaug/question.h"
#include "sqlaug/sql_parser.h"
#include "sqlaug/stats.h"
#include "sqlaug/subprocess_translator.h"
#include "sqlaug/template_translator.h"

namespace sqlaug {
namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string out;

  std::string schemas;
  std::string content;
  std::string db;
  std::string grammar = DefaultGrammarPath().string();
  std::string templates = DefaultTemplatePath().string();
  std::string paraphrases;
  std::string translator_cmd;
  std::string train;
  std::string generated;
  std::string sql;
  std::string pattern;
  std::string stats_md;
  int depth = 3;
  int breadth = 2;
  int max_fills = -1;
  int workers = -1;
  int variant = 0;
  bool exec_order = false;
  std::string strategy;
  int labeled_size = 0;
  int generated_size = 0;
  int epochs = -1;
  int pretrain_epochs = -2;
};

// Writes data to --out, or standard output when it is not given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw Error(ErrorCode::kIo, "cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void Require(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("missing required option ") + flag);
  }
}

RunConfig ResolveConfig(const Options& o) {
  RunConfig rc;
  if (!o.config.empty()) rc = LoadConfig(o.config);
  if (o.seed) {
    rc.augment.seed = *o.seed;
    rc.plan.seed = *o.seed;
  }
  if (o.max_fills >= 0) rc.augment.max_fills_per_sketch_per_db = o.max_fills;
  if (o.workers >= 0) rc.augment.workers = o.workers;
  if (!o.strategy.empty()) rc.plan.strategy = ParseStrategy(o.strategy);
  if (o.epochs >= 0) rc.plan.epochs = o.epochs;
  if (o.pretrain_epochs >= -1) rc.plan.pretrain_epochs = o.pretrain_epochs;
  return rc;
}

std::map<std::string, std::shared_ptr<const Schema>> SchemaMap(const std::string& path) {
  std::map<std::string, std::shared_ptr<const Schema>> out;
  if (path.empty()) return out;
  for (Schema& s : LoadSchemas(path)) {
    std::string id = s.db_id;
    out[id] = std::make_shared<const Schema>(std::move(s));
  }
  return out;
}

std::shared_ptr<const Schema> FindSchema(const Options& o) {
  if (o.schemas.empty()) return nullptr;
  auto schemas = SchemaMap(o.schemas);
  if (o.db.empty() && schemas.size() == 1) return schemas.begin()->second;
  Require(o.db, "--db");
  auto it = schemas.find(o.db);
  if (it == schemas.end()) throw Error(ErrorCode::kInvalidArgument, "no schema " + o.db);
  return it->second;
}

std::unique_ptr<Translator> MakeTranslator(const Options& o) {
  if (!o.translator_cmd.empty()) return std::make_unique<SubprocessTranslator>(o.translator_cmd);
  auto t = std::make_unique<TemplateTranslator>(TemplateTranslator::Load(o.templates));
  if (!o.paraphrases.empty()) t->LoadParaphrases(o.paraphrases);
  return t;
}

std::vector<Pattern> LabeledPatterns(const std::vector<LabeledExample>& labeled,
                                     const std::map<std::string, std::shared_ptr<const Schema>>& schemas,
                                     int* unparsed) {
  std::vector<Pattern> out;
  for (const LabeledExample& ex : labeled) {
    auto it = schemas.find(ex.db_id);
    try {
      out.push_back(ExtractPattern(ParseSql(ex.sql, it == schemas.end() ? nullptr : it->second.get())));
    } catch (const Error&) {
      ++*unparsed;
    }
  }
  return out;
}

int GenSketches(const Options& o) {
  RunConfig rc = ResolveConfig(o);
  Grammar grammar = LoadGrammar(o.grammar);
  std::vector<SketchTree> sketches;
  if (!o.train.empty()) {
    int unparsed = 0;
    std::vector<Pattern> corpus = LabeledPatterns(LoadLabeled(o.train), SchemaMap(o.schemas), &unparsed);
    CoverageConfig cfg;
    cfg.threshold = rc.augment.threshold;
    cfg.start = rc.augment.start_level;
    cfg.max = rc.augment.max_level;
    cfg.hard_cap = rc.augment.hard_cap;
    CoverageResult cov;
    try {
      cov = GenerateUntilCoverage(grammar, corpus, cfg);
    } catch (const CapExceededBeforeThresholdError& e) {
      std::cerr << "warning: " << e.what() << "\n";
      cov = e.partial();
    }
    for (const LevelReport& l : cov.levels) {
      std::fprintf(stderr, "level (%d,%d): +%zu sketches, coverage %.3f\n", l.level.depth_cap,
                   l.level.breadth_cap, l.new_sketches, l.coverage);
    }
    if (unparsed) std::cerr << "warning: " << unparsed << " labeled queries did not parse\n";
    sketches = std::move(cov.sketches);
  } else {
    sketches = EnumerateSketches(grammar, {o.depth, o.breadth}, rc.augment.hard_cap);
  }
  Output out(o.out);
  for (std::size_t i = 0; i < sketches.size(); ++i) {
    ojson rec;
    rec["sketch_id"] = i;
    rec["depth"] = sketches[i].depth;
    rec["breadth"] = sketches[i].breadth;
    rec["pattern"] = sketches[i].Flatten().ToString();
    rec["tree"] = sketches[i].ToString();
    out.stream() << rec.dump() << "\n";
  }
  std::cerr << sketches.size() << " sketches\n";
  return 0;
}

int Fill(const Options& o) {
  Require(o.schemas, "--schemas");
  Require(o.content, "--content");
  RunConfig rc = ResolveConfig(o);
  std::vector<std::string> warnings;
  std::vector<Database> dbs = LoadDatabases(o.schemas, o.content, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  std::vector<Pattern> patterns;
  if (!o.pattern.empty()) {
    patterns.push_back(ParsePattern(o.pattern));
  } else {
    Grammar grammar = LoadGrammar(o.grammar);
    for (const SketchTree& t : EnumerateSketches(grammar, {o.depth, o.breadth}, rc.augment.hard_cap)) {
      patterns.push_back(t.Flatten());
    }
  }
  FillConfig cfg;
  cfg.rng_seed = rc.augment.seed;
  cfg.max_fills_per_sketch_per_db = rc.augment.max_fills_per_sketch_per_db;
  cfg.attempts_per_fill = rc.augment.attempts_per_fill;
  Output out(o.out);
  int total = 0;
  FillReport report;
  for (const Database& db : dbs) {
    if (!o.db.empty() && db.schema->db_id != o.db) continue;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      for (const FilledQuery& fq :
           FillPattern(patterns[i], static_cast<int>(i), *db.content, cfg, &report)) {
        ojson rec;
        rec["db_id"] = db.schema->db_id;
        rec["sql"] = fq.sql;
        rec["pattern"] = patterns[i].ToString();
        rec["sketch_id"] = fq.sketch_id;
        rec["fill_seed"] = fq.fill_seed;
        out.stream() << rec.dump() << "\n";
        ++total;
      }
    }
  }
  std::cerr << total << " queries, " << report.attempts << " attempts\n";
  for (const auto& [reason, count] : report.failures) {
    std::cerr << "  " << reason << ": " << count << "\n";
  }
  return 0;
}

int RunAugment(const Options& o) {
  Require(o.schemas, "--schemas");
  Require(o.content, "--content");
  Require(o.train, "--train");
  RunConfig rc = ResolveConfig(o);
  std::cerr << "resolved config:\n" << DescribeConfig(rc);
  std::vector<std::string> warnings;
  std::vector<Database> dbs = LoadDatabases(o.schemas, o.content, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  Grammar grammar = LoadGrammar(o.grammar);
  std::vector<LabeledExample> labeled = LoadLabeled(o.train);
  std::unique_ptr<Translator> translator = MakeTranslator(o);
  AugmentResult result = Augment(dbs, grammar, labeled, *translator, rc.augment);
  Output out(o.out);
  out.stream() << ToJsonl(result.examples);
  std::cerr << result.stats.Summary() << result.stats.data.ToMarkdown();
  if (!o.stats_md.empty()) {
    Output md(o.stats_md);
    md.stream() << result.stats.data.ToMarkdown();
  }
  return 0;
}

Query ParseInput(const Options& o, std::shared_ptr<const Schema>* schema) {
  Require(o.sql, "--sql");
  *schema = FindSchema(o);
  return ParseSql(o.sql, schema->get());
}

int RunDecompose(const Options& o) {
  std::shared_ptr<const Schema> schema;
  Query q = ParseInput(o, &schema);
  std::vector<Clause> clauses = Decompose(q);
  if (o.exec_order) clauses = ExecutionOrder(std::move(clauses));
  Output out(o.out);
  for (const Clause& c : clauses) out.stream() << ClauseKindName(c.kind) << "\t" << c.Text() << "\n";
  return 0;
}

int RunToQuestion(const Options& o) {
  std::shared_ptr<const Schema> schema;
  Query q = ParseInput(o, &schema);
  std::unique_ptr<Translator> translator = MakeTranslator(o);
  const int variant = o.variant;
  VariantPolicy policy = [variant](const Clause&, int count) { return variant % std::max(1, count); };
  Output out(o.out);
  out.stream() << SqlToQuestion(q, *translator, schema.get(), policy).text << "\n";
  return 0;
}

MiningResult Mine(const Options& o) {
  Require(o.schemas, "--schemas");
  Require(o.train, "--train");
  RunConfig rc = ResolveConfig(o);
  MiningResult r = MineCorpus(LoadLabeled(o.train), SchemaMap(o.schemas), rc.augment.workers);
  std::fprintf(stderr,
               "examples %d, unparsed %d, clauses %d, aligned %d (rate %.3f), filtered %d, kept %zu\n",
               r.stats.examples, r.stats.unparsed, r.stats.clauses, r.stats.aligned,
               r.stats.AlignmentRate(), r.stats.filtered, r.pairs.size());
  return r;
}

int RunAlign(const Options& o) {
  MiningResult r = Mine(o);
  Output out(o.out);
  for (const ClausePair& p : r.pairs) {
    ojson rec;
    rec["question_id"] = p.question_id;
    rec["clause_index"] = p.clause_index;
    rec["kind"] = std::string(ClauseKindName(p.clause.kind));
    rec["clause"] = p.clause.Text();
    rec["begin"] = p.begin;
    rec["end"] = p.end;
    rec["subquestion"] = p.subquestion;
    out.stream() << rec.dump() << "\n";
  }
  return 0;
}

int RunExportCorpus(const Options& o) {
  Require(o.out, "--out");
  MiningResult r = Mine(o);
  Corpus corpus = CollectVariants(r.pairs);
  ExportCorpus(corpus, o.out);
  std::cerr << corpus.entries.size() << " corpus entries\n";
  return 0;
}

int RunPlanEpochs(const Options& o) {
  RunConfig rc = ResolveConfig(o);
  rc.plan.labeled = o.labeled_size;
  rc.plan.generated = o.generated_size;
  std::cerr << "resolved config:\n" << DescribeConfig(rc);
  std::vector<std::string> warnings;
  std::vector<EpochPlan> plans = PlanEpochs(rc.plan, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  Output out(o.out);
  for (const EpochPlan& p : plans) {
    ojson rec;
    rec["strategy"] = std::string(StrategyName(p.strategy));
    rec["epoch"] = p.epoch;
    rec["seed"] = p.seed;
    rec["with_replacement"] = p.with_replacement;
    rec["labeled_ids"] = p.labeled_ids;
    rec["generated_ids"] = p.generated_ids;
    out.stream() << rec.dump() << "\n";
  }
  return 0;
}

int RunStats(const Options& o) {
  Require(o.train, "--train");
  auto schemas = SchemaMap(o.schemas);
  int unparsed = 0;
  std::vector<Pattern> labeled = LabeledPatterns(LoadLabeled(o.train), schemas, &unparsed);
  std::vector<Pattern> generated;
  if (!o.generated.empty()) {
    for (const AugmentedExample& ex : LoadAugmented(o.generated)) {
      if (!ex.pattern.empty()) {
        generated.push_back(ParsePattern(ex.pattern));
        continue;
      }
      auto it = schemas.find(ex.db_id);
      try {
        generated.push_back(ExtractPattern(ParseSql(ex.sql, it == schemas.end() ? nullptr : it->second.get())));
      } catch (const Error&) {
        ++unparsed;
      }
    }
  }
  StatsReport report = ComputeStats(labeled, generated);
  for (const std::string& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (unparsed) std::cerr << "warning: " << unparsed << " queries did not parse\n";
  Output out(o.out);
  out.stream() << report.ToMarkdown();
  return 0;
}

int RunExec(const Options& o) {
  Require(o.schemas, "--schemas");
  Require(o.content, "--content");
  std::shared_ptr<const Schema> schema;
  Query q = ParseInput(o, &schema);
  DatabaseContent content = LoadContentForSchema(o.content, schema);
  Output out(o.out);
  out.stream() << Execute(q, content).ToTsv();
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Grammar-driven text-to-SQL data augmentation"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Random seed")->expected(1);
  app.add_option("--config", o.config, "Configuration file (key = value lines)");
  app.add_option("--out", o.out, "Output path (default: standard output)");

  std::function<int(const Options&)> action;
  auto sub = [&](const char* name, const char* help, std::function<int(const Options&)> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };
  auto db_opts = [&](CLI::App* s) {
    s->add_option("--schemas", o.schemas, "Spider-style tables.json");
    s->add_option("--content", o.content, "Directory of <db_id>.json or <db_id>/ CSV contents");
    s->add_option("--db", o.db, "Database id");
  };
  auto translator_opts = [&](CLI::App* s) {
    s->add_option("--templates", o.templates, "Template pack");
    s->add_option("--paraphrases", o.paraphrases, "Exported corpus to draw paraphrases from");
    s->add_option("--translator-cmd", o.translator_cmd, "External translator command");
  };

  CLI::App* gen = sub("gen-sketches", "Enumerate sketches for a level or until coverage", GenSketches);
  gen->add_option("--grammar", o.grammar, "Grammar file");
  gen->add_option("--train", o.train, "Labeled JSONL; enumerate until coverage");
  gen->add_option("--schemas", o.schemas, "Schemas for parsing the labeled SQL");
  gen->add_option("--depth", o.depth, "Depth cap");
  gen->add_option("--breadth", o.breadth, "Breadth cap");

  CLI::App* fill = sub("fill", "Fill a pattern or a level's sketches on databases", Fill);
  db_opts(fill);
  fill->add_option("--pattern", o.pattern, "Pattern, e.g. \"SELECT A WHERE C OP V\"");
  fill->add_option("--grammar", o.grammar, "Grammar file");
  fill->add_option("--depth", o.depth, "Depth cap");
  fill->add_option("--breadth", o.breadth, "Breadth cap");
  fill->add_option("--max-fills", o.max_fills, "Queries per sketch per database");

  CLI::App* aug = sub("augment", "Generate question/SQL pairs", RunAugment);
  db_opts(aug);
  translator_opts(aug);
  aug->add_option("--grammar", o.grammar, "Grammar file");
  aug->add_option("--train", o.train, "Labeled JSONL");
  aug->add_option("--max-fills", o.max_fills, "Queries per sketch per database");
  aug->add_option("--workers", o.workers, "Worker threads");
  aug->add_option("--stats-md", o.stats_md, "Write the statistics table here");

  CLI::App* dec = sub("decompose", "Print the clauses of a query", RunDecompose);
  db_opts(dec);
  dec->add_option("--sql", o.sql, "SQL query");
  dec->add_flag("--execution-order", o.exec_order, "Order clauses for composition");

  CLI::App* toq = sub("tosql-question", "Generate the question for one query", RunToQuestion);
  db_opts(toq);
  translator_opts(toq);
  toq->add_option("--sql", o.sql, "SQL query");
  toq->add_option("--variant", o.variant, "Template variant for every clause");

  CLI::App* align = sub("align", "Mine clause/subquestion pairs from labeled data", RunAlign);
  align->add_option("--schemas", o.schemas, "Spider-style tables.json");
  align->add_option("--train", o.train, "Labeled JSONL");

  CLI::App* exp = sub("export-corpus", "Write the translation training corpus", RunExportCorpus);
  exp->add_option("--schemas", o.schemas, "Spider-style tables.json");
  exp->add_option("--train", o.train, "Labeled JSONL");

  CLI::App* plan = sub("plan-epochs", "Plan training epochs for a data strategy", RunPlanEpochs);
  plan->add_option("--strategy", o.strategy, "pretrain, merge or sample");
  plan->add_option("--labeled", o.labeled_size, "Labeled set size")->required();
  plan->add_option("--generated", o.generated_size, "Generated set size")->required();
  plan->add_option("--epochs", o.epochs, "Number of epochs");
  plan->add_option("--pretrain-epochs", o.pretrain_epochs, "Epochs on generated data (pretrain)");

  CLI::App* st = sub("stats", "Size, coverage and construct statistics", RunStats);
  st->add_option("--train", o.train, "Labeled JSONL");
  st->add_option("--generated", o.generated, "Generated JSONL");
  st->add_option("--schemas", o.schemas, "Spider-style tables.json");

  CLI::App* ex = sub("exec", "Execute a query on a database", RunExec);
  db_opts(ex);
  ex->add_option("--sql", o.sql, "SQL query");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    CLI::App* target = &app;
    for (CLI::App* s : app.get_subcommands()) target = s;
    std::cerr << target->help();
    return 1;
  }

  try {
    return action(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace
}  // namespace sqlaug

int main(int argc, char** argv) { return sqlaug::Main(argc, argv); }
