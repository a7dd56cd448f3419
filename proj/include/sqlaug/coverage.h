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

#ifndef SQLAUG_COVERAGE_H_
#define SQLAUG_COVERAGE_H_

#include <set>
#include <vector>

#include "sqlaug/error.h"
#include "sqlaug/sketch.h"

namespace sqlaug {

// Fraction of distinct corpus patterns present in `generated`.
// Throws EmptyCorpus.
double Coverage(const std::set<Pattern>& generated, const std::vector<Pattern>& corpus);

struct CoverageConfig {
  double threshold = 0.8;
  ComplexityLevel start{3, 2};
  ComplexityLevel max{8, 6};
  std::size_t hard_cap = kDefaultHardCap;
};

struct LevelReport {
  ComplexityLevel level;
  std::size_t new_sketches = 0;
  double coverage = 0;
};

struct CoverageResult {
  std::vector<SketchTree> sketches;  // deduplicated by pattern, in discovery order
  double coverage = 0;
  ComplexityLevel final_level;
  std::vector<LevelReport> levels;
};

// Next level in the schedule: depth grows while it is at most breadth + 1,
// otherwise breadth grows. Returns false once `max` has been reached.
bool NextLevel(ComplexityLevel& level, const ComplexityLevel& max);

class CapExceededBeforeThresholdError : public Error {
 public:
  explicit CapExceededBeforeThresholdError(CoverageResult partial);
  const CoverageResult& partial() const { return partial_; }

 private:
  CoverageResult partial_;
};

// Enumerates levels from simple to complex until the accumulated sketches
// cover `threshold` of the corpus patterns.
CoverageResult GenerateUntilCoverage(const Grammar& grammar,
                                     const std::vector<Pattern>& corpus,
                                     const CoverageConfig& config = {});

}  // namespace sqlaug

#endif  // SQLAUG_COVERAGE_H_
