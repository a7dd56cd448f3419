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

#ifndef SQLAUG_TESTS_SUPPORT_PROPERTIES_H_
#define SQLAUG_TESTS_SUPPORT_PROPERTIES_H_

#include <optional>
#include <string>
#include <vector>

#include "sqlaug/ast.h"
#include "sqlaug/question.h"
#include "sqlaug/schema.h"

namespace sqlaug::testing {

// Stage of a clause kind in the order WHERE, GROUP BY + HAVING, SELECT,
// ORDER BY, written out independently of the library's own ranking.
int KindStage(ClauseKind kind);

// Fragments must be disjoint and increasing in the text, every left-side
// fragment must precede the set operator and the right side, and stages
// must not decrease within a side.
std::optional<std::string> FragmentOrderViolation(const ComposedQuestion& q);

// Clause token spans, FROM excluded, must cover the written query's tokens
// exactly once.
std::optional<std::string> PartitionViolation(const Query& q);

// Column natural names and literal values of `q` (FROM and LIMIT excluded)
// that do not occur verbatim in `question`.
std::vector<std::string> MissingCopies(const Query& q, const Schema& schema,
                                       const std::string& question);

}  // namespace sqlaug::testing

#endif  // SQLAUG_TESTS_SUPPORT_PROPERTIES_H_
