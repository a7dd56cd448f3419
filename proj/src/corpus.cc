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

#include "sqlaug/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"
#include "sqlaug/error.h"
#include "sqlaug/sql_parser.h"
#include "sqlaug/text_norm.h"

namespace sqlaug {

namespace {

using json = nlohmann::json;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Mined {
  std::vector<ClausePair> pairs;
  MiningStats stats;
};

Mined MineOne(const LabeledExample& ex, int id,
              const std::map<std::string, std::shared_ptr<const Schema>>& schemas) {
  Mined m;
  auto it = schemas.find(ex.db_id);
  if (it == schemas.end()) {
    ++m.stats.missing_schema;
    return m;
  }
  const Schema* schema = it->second.get();
  Query q;
  try {
    q = ParseSql(ex.sql, schema);
  } catch (const Error&) {
    ++m.stats.unparsed;
    return m;
  }
  std::vector<std::string> tokens = TokenizeQuestion(ex.question);
  TokenAlignment alignment = LinkSchema(tokens, q, schema);
  ExtractStats es;
  std::vector<ClausePair> pairs = ExtractPairs(tokens, q, alignment, schema, id, &es);
  m.stats.clauses = es.clauses;
  m.stats.aligned = es.aligned;
  std::size_t before = pairs.size();
  m.pairs = FilterPairs(std::move(pairs));
  m.stats.filtered = static_cast<int>(before - m.pairs.size());
  return m;
}

}  // namespace

std::vector<LabeledExample> ParseLabeled(std::string_view jsonl) {
  std::vector<LabeledExample> out;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json rec = json::parse(line);
      LabeledExample ex;
      ex.db_id = rec.at("db_id").get<std::string>();
      ex.question = rec.at("question").get<std::string>();
      ex.sql = rec.contains("query") ? rec["query"].get<std::string>()
                                     : rec.at("sql").get<std::string>();
      out.push_back(std::move(ex));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<LabeledExample> LoadLabeled(const std::filesystem::path& path) {
  try {
    return ParseLabeled(ReadFile(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kFormat) throw;
    throw Error(ErrorCode::kFormat, path.string() + ": " + e.message());
  }
}

Corpus CollectVariants(const std::vector<ClausePair>& pairs) {
  std::vector<const ClausePair*> ordered;
  for (const ClausePair& p : pairs) ordered.push_back(&p);
  std::stable_sort(ordered.begin(), ordered.end(), [](const ClausePair* a, const ClausePair* b) {
    return std::pair(a->question_id, a->clause_index) <
           std::pair(b->question_id, b->clause_index);
  });
  Corpus corpus;
  std::map<std::string, std::vector<std::string>> variants;      // key -> slotted texts
  std::map<std::pair<std::string, std::string>, std::size_t> seen;  // (key, text) -> entry
  for (const ClausePair* p : ordered) {
    std::string key = p->clause.Key();
    auto found = seen.find({key, p->subquestion});
    if (found != seen.end()) {
      ++corpus.entries[found->second].count;
      continue;
    }
    std::vector<std::string>& list = variants[key];
    auto v = std::find(list.begin(), list.end(), p->slotted);
    if (v == list.end()) v = list.insert(list.end(), p->slotted);
    CorpusEntry e;
    e.key = key;
    e.kind = p->clause.kind;
    for (const SqlToken& t : p->clause.tokens) {
      e.clause_tokens.push_back(t.text);
      e.token_types.emplace_back(TokenTypeName(t.type));
    }
    e.subquestion = p->subquestion;
    e.slotted = p->slotted;
    e.variant = static_cast<int>(v - list.begin());
    e.question_id = p->question_id;
    e.clause_index = p->clause_index;
    seen.emplace(std::pair(key, p->subquestion), corpus.entries.size());
    corpus.entries.push_back(std::move(e));
  }
  return corpus;
}

std::string CorpusToJsonl(const Corpus& corpus) {
  std::string out;
  for (const CorpusEntry& e : corpus.entries) {
    nlohmann::ordered_json rec;
    rec["clause_tokens"] = e.clause_tokens;
    rec["token_types"] = e.token_types;
    rec["variant"] = e.variant;
    rec["subquestion"] = e.subquestion;
    rec["key"] = e.key;
    rec["template"] = e.slotted;
    rec["kind"] = std::string(ClauseKindName(e.kind));
    rec["count"] = e.count;
    out += rec.dump();
    out.push_back('\n');
  }
  return out;
}

void ExportCorpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << CorpusToJsonl(corpus);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

MiningResult MineCorpus(const std::vector<LabeledExample>& examples,
                        const std::map<std::string, std::shared_ptr<const Schema>>& schemas,
                        int threads) {
  const int n = static_cast<int>(examples.size());
  std::vector<Mined> mined(n);
  threads = std::clamp(threads, 1, std::max(1, n));
  std::vector<std::thread> workers;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (int i = w; i < n; i += threads) mined[i] = MineOne(examples[i], i, schemas);
    });
  }
  for (std::thread& t : workers) t.join();

  MiningResult result;
  result.stats.examples = n;
  for (Mined& m : mined) {
    result.stats.unparsed += m.stats.unparsed;
    result.stats.missing_schema += m.stats.missing_schema;
    result.stats.clauses += m.stats.clauses;
    result.stats.aligned += m.stats.aligned;
    result.stats.filtered += m.stats.filtered;
    for (ClausePair& p : m.pairs) result.pairs.push_back(std::move(p));
  }
  return result;
}

}  // namespace sqlaug
