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

#ifndef SQLAUG_EXECUTION_ORDER_H_
#define SQLAUG_EXECUTION_ORDER_H_

#include <array>

#include "sqlaug/sql_writer.h"

namespace sqlaug {

// Logical evaluation order of the clauses of one unit query. The evaluator
// runs its stages in this order and question composition ranks clauses by it.
inline constexpr std::array<Section, 6> kExecutionOrder = {
    Section::kWhere,   Section::kGroupBy, Section::kHaving,
    Section::kSelect,  Section::kOrderBy, Section::kLimit,
};

constexpr int ExecutionRank(Section s) {
  for (std::size_t i = 0; i < kExecutionOrder.size(); ++i) {
    if (kExecutionOrder[i] == s) return static_cast<int>(i);
  }
  return static_cast<int>(kExecutionOrder.size());
}

}  // namespace sqlaug

#endif  // SQLAUG_EXECUTION_ORDER_H_
