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

#include "sqlaug/coverage.h"

#include <algorithm>
#include <cstdio>

namespace sqlaug {

double Coverage(const std::set<Pattern>& generated, const std::vector<Pattern>& corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus has no patterns");
  std::set<Pattern> distinct(corpus.begin(), corpus.end());
  std::size_t hit = 0;
  for (const Pattern& p : distinct) hit += generated.count(p);
  return static_cast<double>(hit) / static_cast<double>(distinct.size());
}

bool NextLevel(ComplexityLevel& level, const ComplexityLevel& max) {
  bool can_deepen = level.depth_cap < max.depth_cap;
  bool can_widen = level.breadth_cap < max.breadth_cap;
  if (!can_deepen && !can_widen) return false;
  if (can_deepen && (level.depth_cap <= level.breadth_cap + 1 || !can_widen)) {
    ++level.depth_cap;
  } else {
    ++level.breadth_cap;
  }
  return true;
}

namespace {

std::string DescribeLevel(const ComplexityLevel& l) {
  return "(" + std::to_string(l.depth_cap) + "," + std::to_string(l.breadth_cap) + ")";
}

}  // namespace

CapExceededBeforeThresholdError::CapExceededBeforeThresholdError(CoverageResult partial)
    : Error(ErrorCode::kCapExceededBeforeThreshold,
            [&] {
              char buf[32];
              std::snprintf(buf, sizeof buf, "%.4f", partial.coverage);
              return std::string("coverage ") + buf + " at level " +
                     DescribeLevel(partial.final_level);
            }()),
      partial_(std::move(partial)) {}

CoverageResult GenerateUntilCoverage(const Grammar& grammar,
                                     const std::vector<Pattern>& corpus,
                                     const CoverageConfig& config) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus has no patterns");
  if (!(config.threshold > 0 && config.threshold <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be in (0, 1]");
  }
  CoverageResult result;
  std::set<Pattern> seen;
  ComplexityLevel level = config.start;
  while (true) {
    LevelReport report{level, 0, 0};
    bool capped = false;
    try {
      for (SketchTree& t : EnumerateSketches(grammar, level, config.hard_cap)) {
        if (!seen.insert(t.Flatten()).second) continue;
        result.sketches.push_back(std::move(t));
        ++report.new_sketches;
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kCapExceeded) {
        capped = true;
      } else if (e.code() != ErrorCode::kExhausted) {
        throw;
      }
    }
    if (capped) break;
    result.coverage = Coverage(seen, corpus);
    result.final_level = level;
    report.coverage = result.coverage;
    result.levels.push_back(report);
    if (result.coverage >= config.threshold) return result;
    if (!NextLevel(level, config.max)) break;
  }
  throw CapExceededBeforeThresholdError(std::move(result));
}

}  // namespace sqlaug
