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

#ifndef SQLAUG_GENERATOR_H_
#define SQLAUG_GENERATOR_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sqlaug/ast.h"
#include "sqlaug/error.h"
#include "sqlaug/pattern.h"
#include "sqlaug/schema.h"
#include "sqlaug/sketch.h"

namespace sqlaug {

struct FillConfig {
  std::uint64_t rng_seed = 0;
  int max_fills_per_sketch_per_db = 8;
  bool allow_value_perturbation = false;
  // Attempts per requested fill before giving up on a sketch.
  int attempts_per_fill = 8;
  // Aggregators the filler may choose from.
  std::vector<AggFunc> aggregates = {AggFunc::kMax, AggFunc::kMin, AggFunc::kCount,
                                     AggFunc::kSum, AggFunc::kAvg};
};

struct FilledQuery {
  Query ast;
  std::string sql;
  int sketch_id = 0;
  std::uint64_t fill_seed = 0;
};

struct FillReport {
  int attempts = 0;
  int duplicates = 0;
  std::map<std::string, int> failures;  // reason -> count
  // Set when the schema cannot host the sketch at all.
  bool no_compatible_columns = false;
};

// Instantiates a pattern against one database. Every returned query extracts
// back to `pattern`. Deterministic in (pattern, sketch_id, content, cfg).
std::vector<FilledQuery> FillPattern(const Pattern& pattern, int sketch_id,
                                     const DatabaseContent& content, const FillConfig& cfg,
                                     FillReport* report = nullptr);

std::vector<Query> FillSketch(const SketchTree& sketch, const Schema& schema,
                              const DatabaseContent& content, const FillConfig& cfg,
                              FillReport* report = nullptr);

struct ExecDiagnostic {
  std::size_t index = 0;  // position in the input list
  ErrorCode code = ErrorCode::kInvalidQuery;
  std::string message;
};

// Keeps the queries that execute without error, in input order.
std::vector<Query> FilterExecutable(const std::vector<Query>& queries,
                                    const DatabaseContent& content,
                                    std::vector<ExecDiagnostic>* diagnostics = nullptr);

// Index-returning form used by the pipeline.
std::vector<std::size_t> ExecutableIndices(const std::vector<const Query*>& queries,
                                           const DatabaseContent& content,
                                           std::vector<ExecDiagnostic>* diagnostics = nullptr);

}  // namespace sqlaug

#endif  // SQLAUG_GENERATOR_H_
