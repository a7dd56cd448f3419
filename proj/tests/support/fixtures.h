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

#ifndef SQLAUG_TESTS_SUPPORT_FIXTURES_H_
#define SQLAUG_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sqlaug/augment.h"
#include "sqlaug/corpus.h"
#include "sqlaug/generator.h"
#include "sqlaug/sketch.h"
#include "sqlaug/schema.h"
#include "sqlaug/template_translator.h"

namespace sqlaug::testing {

std::filesystem::path DataDir();
std::filesystem::path FixtureDir();

// The five shipped fixture databases, sorted by db_id.
const std::vector<Database>& FixtureDatabases();
const Database& FixtureDatabase(const std::string& db_id);
std::map<std::string, std::shared_ptr<const Schema>> FixtureSchemaMap();

const std::vector<LabeledExample>& FixtureLabeled();

TemplateTranslator DefaultTranslator();

// Every sketch of the default grammar at its largest level.
const std::vector<SketchTree>& DefaultSketches();

struct GeneratedQuery {
  const Database* db = nullptr;
  FilledQuery query;
};

// Fills every `stride`-th default sketch on every fixture database.
std::vector<GeneratedQuery> GeneratedSample(int stride, int fills, std::uint64_t seed);

// Builds a one-schema database from inline JSON in the tables.json layout
// and a content document.
Database InlineDatabase(const std::string& tables_json, const std::string& content_json);

// A fresh empty directory under the system temp dir.
std::filesystem::path ScratchDir(const std::string& name);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace sqlaug::testing

#endif  // SQLAUG_TESTS_SUPPORT_FIXTURES_H_
