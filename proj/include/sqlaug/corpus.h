// Mining a clause-to-subquestion translation corpus from labeled
// question/SQL pairs, and its JSONL export.

#ifndef SQLAUG_CORPUS_H_
#define SQLAUG_CORPUS_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sqlaug/alignment.h"
#include "sqlaug/schema.h"

namespace sqlaug {

struct LabeledExample {
  std::string db_id;
  std::string question;
  std::string sql;
};

// JSONL with {question, query|sql, db_id} per line; blank lines skipped.
std::vector<LabeledExample> LoadLabeled(const std::filesystem::path& path);
std::vector<LabeledExample> ParseLabeled(std::string_view jsonl);

struct CorpusEntry {
  std::string key;  // Clause::Key()
  ClauseKind kind = ClauseKind::kSelect;
  std::vector<std::string> clause_tokens;
  std::vector<std::string> token_types;
  std::string subquestion;
  std::string slotted;
  int variant = 0;
  int count = 1;  // occurrences of this (key, subquestion)
  int question_id = 0;  // first occurrence
  int clause_index = 0;
};

struct Corpus {
  std::vector<CorpusEntry> entries;  // ordered by (question_id, clause_index)
};

// Groups pairs by clause key. Distinct slotted subquestions of one key get
// variants 0, 1, ... in first-seen order; a repeated (key, subquestion)
// is stored once with its count.
Corpus CollectVariants(const std::vector<ClausePair>& pairs);

// {clause_tokens, token_types, variant, subquestion, key, template, kind,
// count} per line.
void ExportCorpus(const Corpus& corpus, const std::filesystem::path& path);
std::string CorpusToJsonl(const Corpus& corpus);

struct MiningStats {
  int examples = 0;
  int unparsed = 0;      // SQL that failed to parse against its schema
  int missing_schema = 0;
  int clauses = 0;
  int aligned = 0;       // clauses that yielded a pair
  int filtered = 0;      // pairs dropped by the containment filter

  double AlignmentRate() const { return clauses == 0 ? 0.0 : double(aligned) / clauses; }
};

struct MiningResult {
  std::vector<ClausePair> pairs;  // after filtering, by (question, clause)
  MiningStats stats;
};

// Links, extracts and filters every example. Examples are processed in
// parallel by `threads` workers; the result does not depend on it.
MiningResult MineCorpus(const std::vector<LabeledExample>& examples,
                        const std::map<std::string, std::shared_ptr<const Schema>>& schemas,
                        int threads = 1);

}  // namespace sqlaug

#endif  // SQLAUG_CORPUS_H_
