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

#include "fixtures.h"

#include "sqlaug/grammar.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace sqlaug::testing {

std::filesystem::path DataDir() { return SQLAUG_DATA_DIR; }

std::filesystem::path FixtureDir() { return DataDir() / "fixtures"; }

const std::vector<Database>& FixtureDatabases() {
  static const std::vector<Database> dbs =
      LoadDatabases(FixtureDir() / "tables.json", FixtureDir() / "db");
  return dbs;
}

const Database& FixtureDatabase(const std::string& db_id) {
  for (const Database& db : FixtureDatabases()) {
    if (db.schema->db_id == db_id) return db;
  }
  throw std::runtime_error("no fixture database " + db_id);
}

std::map<std::string, std::shared_ptr<const Schema>> FixtureSchemaMap() {
  std::map<std::string, std::shared_ptr<const Schema>> out;
  for (const Database& db : FixtureDatabases()) out[db.schema->db_id] = db.schema;
  return out;
}

const std::vector<LabeledExample>& FixtureLabeled() {
  static const std::vector<LabeledExample> examples = LoadLabeled(FixtureDir() / "train.jsonl");
  return examples;
}

TemplateTranslator DefaultTranslator() { return TemplateTranslator::Load(DefaultTemplatePath()); }

const std::vector<SketchTree>& DefaultSketches() {
  static const std::vector<SketchTree> sketches =
      EnumerateSketches(LoadGrammar(DefaultGrammarPath()), ComplexityLevel{8, 6});
  return sketches;
}

std::vector<GeneratedQuery> GeneratedSample(int stride, int fills, std::uint64_t seed) {
  FillConfig cfg;
  cfg.rng_seed = seed;
  cfg.max_fills_per_sketch_per_db = fills;
  std::vector<GeneratedQuery> out;
  const std::vector<SketchTree>& sketches = DefaultSketches();
  for (const Database& db : FixtureDatabases()) {
    for (std::size_t i = 0; i < sketches.size(); i += stride) {
      for (FilledQuery& fq :
           FillPattern(sketches[i].Flatten(), static_cast<int>(i), *db.content, cfg)) {
        out.push_back({&db, std::move(fq)});
      }
    }
  }
  return out;
}

Database InlineDatabase(const std::string& tables_json, const std::string& content_json) {
  std::vector<Schema> schemas = ParseSchemas(tables_json);
  if (schemas.size() != 1) throw std::runtime_error("expected one schema");
  auto schema = std::make_shared<const Schema>(std::move(schemas[0]));
  auto content = std::make_shared<const DatabaseContent>(ParseContentJson(content_json, schema));
  return {schema, content};
}

std::filesystem::path ScratchDir(const std::string& name) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("sqlaug_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sqlaug::testing
