// End-to-end augmentation: coverage-driven sketch generation, filling on
// every database, executability filtering and question generation.

#ifndef SQLAUG_AUGMENT_H_
#define SQLAUG_AUGMENT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sqlaug/corpus.h"
#include "sqlaug/coverage.h"
#include "sqlaug/dataset.h"
#include "sqlaug/grammar.h"
#include "sqlaug/question.h"
#include "sqlaug/schema.h"
#include "sqlaug/stats.h"
#include "sqlaug/translator.h"

namespace sqlaug {

struct AugmentConfig {
  std::uint64_t seed = 0;
  double threshold = 0.8;
  ComplexityLevel start_level{3, 2};
  ComplexityLevel max_level{8, 6};
  std::size_t hard_cap = kDefaultHardCap;
  int max_fills_per_sketch_per_db = 8;
  int attempts_per_fill = 8;
  int workers = 1;
  // Draw each clause's template variant from the seed; otherwise variant 0.
  bool random_variants = true;
};

struct Database {
  std::shared_ptr<const Schema> schema;
  std::shared_ptr<const DatabaseContent> content;
};

// Schemas from a tables.json file with their contents from `content_dir`.
// Schemas without content are skipped with a warning. Sorted by db_id.
std::vector<Database> LoadDatabases(const std::filesystem::path& schemas_path,
                                    const std::filesystem::path& content_dir,
                                    std::vector<std::string>* warnings = nullptr);

struct DbReport {
  std::string db_id;
  int filled = 0;
  int executed = 0;
  int emitted = 0;
};

struct AugmentStats {
  int labeled = 0;
  int labeled_unparsed = 0;
  int sketches = 0;
  double sketch_coverage = 0;
  ComplexityLevel final_level;
  std::vector<LevelReport> levels;
  bool cap_exceeded = false;
  int fill_attempts = 0;
  int duplicates = 0;
  int exec_failures = 0;
  int translation_failures = 0;
  int self_check_failures = 0;
  std::map<std::string, int> fill_failures;
  std::vector<DbReport> per_db;
  StatsReport data;  // labeled vs emitted examples
  std::vector<std::string> warnings;

  std::string Summary() const;
};

struct AugmentResult {
  std::vector<AugmentedExample> examples;
  AugmentStats stats;
};

// Output depends only on the inputs and `config` minus `workers`. Stage
// errors are rethrown with the stage name prepended; when the sketch cap is
// hit before the coverage threshold, the sketches found so far are used.
// The question augment emits for a filled query, including the per-query
// template variant draws.
ComposedQuestion GeneratedQuestion(const Query& q, const Schema& schema, int sketch_id,
                                   std::uint64_t fill_seed, Translator& translator,
                                   const AugmentConfig& config);

AugmentResult Augment(const std::vector<Database>& databases, const Grammar& grammar,
                      const std::vector<LabeledExample>& labeled, Translator& translator,
                      const AugmentConfig& config);

}  // namespace sqlaug

#endif  // SQLAUG_AUGMENT_H_
