// Size, pattern coverage and query-construct statistics of datasets.

#ifndef SQLAUG_STATS_H_
#define SQLAUG_STATS_H_

#include <string>
#include <vector>

#include "sqlaug/pattern.h"

namespace sqlaug {

struct DatasetStats {
  int size = 0;
  int distinct_patterns = 0;
  ConstructFlags constructs;  // constructs present in at least one example
};

struct StatsReport {
  DatasetStats labeled;
  DatasetStats generated;
  int shared_patterns = 0;
  double coverage = 0;  // labeled patterns found among generated ones
  std::vector<std::string> warnings;

  // Rows "Labeled" and `generated_name` with Size, Patterns, Coverage and
  // one check column per construct.
  std::string ToMarkdown(const std::string& generated_name = "Generated") const;
};

StatsReport ComputeStats(const std::vector<Pattern>& labeled, const std::vector<Pattern>& generated);

}  // namespace sqlaug

#endif  // SQLAUG_STATS_H_
