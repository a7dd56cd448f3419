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

#ifndef SQLAUG_EVALUATOR_H_
#define SQLAUG_EVALUATOR_H_

#include <string>
#include <vector>

#include "sqlaug/ast.h"
#include "sqlaug/schema.h"

namespace sqlaug {

struct ResultTable {
  std::vector<std::string> labels;
  std::vector<std::vector<Value>> rows;

  // Header line of labels followed by one line per row; nulls print as NULL.
  std::string ToTsv() const;
};

// Runs the query over in-memory content. Throws DivideByZero, TypeError,
// InvalidQuery or UnknownIdentifier.
ResultTable Execute(const Query& q, const DatabaseContent& content);

// Static checks only (identifiers, types, grouping); no data is touched.
void ValidateSemantics(const Query& q, const Schema& schema);

// Total order used by ORDER BY: null < numbers < text.
int CompareValues(const Value& a, const Value& b);

}  // namespace sqlaug

#endif  // SQLAUG_EVALUATOR_H_
