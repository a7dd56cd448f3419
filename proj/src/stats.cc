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

#include "sqlaug/stats.h"

#include <cstdio>
#include <set>

namespace sqlaug {

namespace {

DatasetStats Describe(const std::vector<Pattern>& patterns, std::set<Pattern>* distinct) {
  DatasetStats s;
  s.size = static_cast<int>(patterns.size());
  for (const Pattern& p : patterns) {
    if (distinct->insert(p).second) s.constructs |= ConstructsOf(p);
  }
  s.distinct_patterns = static_cast<int>(distinct->size());
  return s;
}

std::string Row(const std::string& name, const DatasetStats& s, const std::string& coverage) {
  auto mark = [](bool b) { return b ? " ✓ |" : " ✗ |"; };
  const ConstructFlags& f = s.constructs;
  std::string out = "| " + name + " | " + std::to_string(s.size) + " | " +
                    std::to_string(s.distinct_patterns) + " | " + coverage + " |";
  for (bool b : {f.select, f.where, f.group, f.having, f.order, f.calculation, f.nested,
                 f.multi_sql}) {
    out += mark(b);
  }
  return out + "\n";
}

}  // namespace

StatsReport ComputeStats(const std::vector<Pattern>& labeled,
                         const std::vector<Pattern>& generated) {
  StatsReport r;
  std::set<Pattern> lab, gen;
  r.labeled = Describe(labeled, &lab);
  r.generated = Describe(generated, &gen);
  for (const Pattern& p : lab) r.shared_patterns += gen.count(p) ? 1 : 0;
  if (lab.empty()) {
    r.warnings.push_back("labeled set is empty; coverage is reported as 0");
  } else {
    r.coverage = static_cast<double>(r.shared_patterns) / static_cast<double>(lab.size());
  }
  if (gen.empty()) r.warnings.push_back("generated set is empty");
  return r;
}

std::string StatsReport::ToMarkdown(const std::string& generated_name) const {
  char cov[32];
  std::snprintf(cov, sizeof(cov), "%.1f%%", coverage * 100.0);
  std::string out =
      "| Dataset | Size | Patterns | Coverage | Select | Where | Group | Having | Order | "
      "Calculation | Nested | Multi-SQL |\n"
      "|---|---:|---:|---:|:-:|:-:|:-:|:-:|:-:|:-:|:-:|:-:|\n";
  out += Row("Labeled", labeled, "-");
  out += Row(generated_name, generated, cov);
  return out;
}

}  // namespace sqlaug
