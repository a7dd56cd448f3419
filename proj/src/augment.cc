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

#include "sqlaug/augment.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <set>
#include <thread>

#include "sqlaug/error.h"
#include "sqlaug/evaluator.h"
#include "sqlaug/generator.h"
#include "sqlaug/question.h"
#include "sqlaug/random.h"
#include "sqlaug/sql_parser.h"

namespace sqlaug {

namespace {

// Serializes calls into a translator that is not safe for concurrent use.
class LockedTranslator : public Translator {
 public:
  explicit LockedTranslator(Translator& inner) : inner_(inner) {}
  std::string id() const override { return inner_.id(); }
  bool Supports(ClauseKind kind) const override { return inner_.Supports(kind); }
  int VariantCount(const TranslationRequest& r) const override {
    std::lock_guard<std::mutex> lock(mu_);
    return inner_.VariantCount(r);
  }
  std::string Translate(const TranslationRequest& r) override {
    std::lock_guard<std::mutex> lock(mu_);
    return inner_.Translate(r);
  }

 private:
  Translator& inner_;
  mutable std::mutex mu_;
};

struct ItemResult {
  std::vector<AugmentedExample> examples;
  FillReport fill;
  int filled = 0;
  int executed = 0;
  int translation_failures = 0;
  int self_check_failures = 0;
};

[[noreturn]] void Rethrow(const char* stage, const Error& e) {
  throw Error(e.code(), std::string(stage) + ": " + e.message());
}

ItemResult RunItem(const Database& db, const SketchTree& sketch, int sketch_id,
                   Translator& translator, const AugmentConfig& config) {
  ItemResult r;
  const Schema& schema = *db.schema;
  const Pattern pattern = sketch.Flatten();
  const std::string pattern_text = pattern.ToString();
  FillConfig fill;
  fill.rng_seed = config.seed;
  fill.max_fills_per_sketch_per_db = config.max_fills_per_sketch_per_db;
  fill.attempts_per_fill = config.attempts_per_fill;
  std::vector<FilledQuery> queries = FillPattern(pattern, sketch_id, *db.content, fill, &r.fill);
  r.filled = static_cast<int>(queries.size());
  for (const FilledQuery& fq : queries) {
    try {
      Execute(fq.ast, *db.content);
    } catch (const Error&) {
      continue;
    }
    ++r.executed;
    AugmentedExample ex;
    try {
      ex.question =
          GeneratedQuestion(fq.ast, schema, sketch_id, fq.fill_seed, translator, config).text;
    } catch (const Error&) {
      ++r.translation_failures;
      continue;
    }
    // Self-check: the stored SQL must parse back to the same pattern.
    bool ok = false;
    try {
      ok = ExtractPattern(ParseSql(fq.sql, &schema)) == pattern;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      ++r.self_check_failures;
      continue;
    }
    ex.db_id = schema.db_id;
    ex.sql = fq.sql;
    ex.pattern = pattern_text;
    ex.sketch_id = sketch_id;
    ex.fill_seed = fq.fill_seed;
    ex.translator_id = translator.id();
    r.examples.push_back(std::move(ex));
  }
  return r;
}

}  // namespace

std::vector<Database> LoadDatabases(const std::filesystem::path& schemas_path,
                                    const std::filesystem::path& content_dir,
                                    std::vector<std::string>* warnings) {
  std::vector<Database> out;
  for (Schema& s : LoadSchemas(schemas_path)) {
    auto schema = std::make_shared<const Schema>(std::move(s));
    try {
      auto content = std::make_shared<const DatabaseContent>(
          LoadContentForSchema(content_dir, schema));
      out.push_back({schema, content});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIo) throw;
      if (warnings) warnings->push_back("skipping " + schema->db_id + ": " + e.what());
    }
  }
  std::sort(out.begin(), out.end(), [](const Database& a, const Database& b) {
    return a.schema->db_id < b.schema->db_id;
  });
  return out;
}

std::string AugmentStats::Summary() const {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof(buf),
                "labeled: %d (%d unparsed)\nsketches: %d, sketch coverage %.3f at level "
                "(%d,%d)%s\n",
                labeled, labeled_unparsed, sketches, sketch_coverage, final_level.depth_cap,
                final_level.breadth_cap, cap_exceeded ? " [cap exceeded]" : "");
  out += buf;
  for (const LevelReport& l : levels) {
    std::snprintf(buf, sizeof(buf), "  level (%d,%d): +%zu sketches, coverage %.3f\n",
                  l.level.depth_cap, l.level.breadth_cap, l.new_sketches, l.coverage);
    out += buf;
  }
  for (const DbReport& d : per_db) {
    std::snprintf(buf, sizeof(buf), "db %s: filled %d, executed %d, emitted %d\n",
                  d.db_id.c_str(), d.filled, d.executed, d.emitted);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf),
                "generated: %d, data coverage %.3f, fill attempts %d, duplicates %d, exec "
                "failures %d, translation failures %d, self-check failures %d\n",
                data.generated.size, data.coverage, fill_attempts, duplicates, exec_failures,
                translation_failures, self_check_failures);
  out += buf;
  for (const auto& [reason, count] : fill_failures) {
    out += "  fill failure: " + reason + ": " + std::to_string(count) + "\n";
  }
  for (const std::string& w : warnings) out += "warning: " + w + "\n";
  for (const std::string& w : data.warnings) out += "warning: " + w + "\n";
  return out;
}

ComposedQuestion GeneratedQuestion(const Query& q, const Schema& schema, int sketch_id,
                                   std::uint64_t fill_seed, Translator& translator,
                                   const AugmentConfig& config) {
  Rng rng(DeriveSeed(config.seed, {Fnv1a64(schema.db_id), static_cast<std::uint64_t>(sketch_id),
                                   fill_seed, 0x51}));
  VariantPolicy policy = nullptr;
  if (config.random_variants) {
    policy = [&rng](const Clause&, int count) {
      return count > 1 ? static_cast<int>(rng.Below(count)) : 0;
    };
  }
  return SqlToQuestion(q, translator, &schema, policy);
}

AugmentResult Augment(const std::vector<Database>& databases, const Grammar& grammar,
                      const std::vector<LabeledExample>& labeled, Translator& translator,
                      const AugmentConfig& config) {
  AugmentResult result;
  AugmentStats& stats = result.stats;

  std::map<std::string, const Schema*> by_id;
  for (const Database& db : databases) by_id[db.schema->db_id] = db.schema.get();
  std::vector<Pattern> labeled_patterns;
  for (const LabeledExample& ex : labeled) {
    auto it = by_id.find(ex.db_id);
    try {
      labeled_patterns.push_back(
          ExtractPattern(ParseSql(ex.sql, it == by_id.end() ? nullptr : it->second)));
    } catch (const Error&) {
      ++stats.labeled_unparsed;
    }
  }
  stats.labeled = static_cast<int>(labeled.size());

  if (databases.empty()) {
    stats.warnings.push_back("no databases supplied; nothing generated");
    stats.data = ComputeStats(labeled_patterns, {});
    return result;
  }

  CoverageConfig cov_cfg;
  cov_cfg.threshold = config.threshold;
  cov_cfg.start = config.start_level;
  cov_cfg.max = config.max_level;
  cov_cfg.hard_cap = config.hard_cap;
  CoverageResult cov;
  try {
    cov = GenerateUntilCoverage(grammar, labeled_patterns, cov_cfg);
  } catch (const CapExceededBeforeThresholdError& e) {
    cov = e.partial();
    stats.cap_exceeded = true;
    stats.warnings.push_back(e.what());
  } catch (const Error& e) {
    Rethrow("coverage", e);
  }
  stats.sketches = static_cast<int>(cov.sketches.size());
  stats.sketch_coverage = cov.coverage;
  stats.final_level = cov.final_level;
  stats.levels = cov.levels;

  const int n_sketches = static_cast<int>(cov.sketches.size());
  const int n_items = static_cast<int>(databases.size()) * n_sketches;
  std::vector<ItemResult> items(n_items);
  LockedTranslator locked(translator);
  Translator& shared = translator.thread_safe() ? translator : locked;

  std::atomic<int> next{0};
  std::mutex error_mu;
  std::optional<Error> first_error;
  auto work = [&] {
    for (int i = next++; i < n_items; i = next++) {
      const Database& db = databases[i / n_sketches];
      int sketch_id = i % n_sketches;
      try {
        items[i] = RunItem(db, cov.sketches[sketch_id], sketch_id, shared, config);
      } catch (const Error& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error.emplace(e.code(), "fill " + db.schema->db_id + ": " + e.message());
      }
    }
  };
  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) throw *first_error;

  std::set<std::pair<std::string, std::string>> seen;
  std::vector<Pattern> generated_patterns;
  for (std::size_t d = 0; d < databases.size(); ++d) {
    DbReport report;
    report.db_id = databases[d].schema->db_id;
    for (int s = 0; s < n_sketches; ++s) {
      ItemResult& item = items[d * n_sketches + s];
      report.filled += item.filled;
      report.executed += item.executed;
      stats.fill_attempts += item.fill.attempts;
      stats.duplicates += item.fill.duplicates;
      stats.exec_failures += item.filled - item.executed;
      stats.translation_failures += item.translation_failures;
      stats.self_check_failures += item.self_check_failures;
      for (const auto& [reason, count] : item.fill.failures) stats.fill_failures[reason] += count;
      for (AugmentedExample& ex : item.examples) {
        if (!seen.emplace(ex.db_id, ex.sql).second) {
          ++stats.duplicates;
          continue;
        }
        generated_patterns.push_back(ParsePattern(ex.pattern));
        result.examples.push_back(std::move(ex));
        ++report.emitted;
      }
    }
    stats.per_db.push_back(std::move(report));
  }
  stats.data = ComputeStats(labeled_patterns, generated_patterns);
  return result;
}

}  // namespace sqlaug
