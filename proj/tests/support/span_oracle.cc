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

#include "span_oracle.h"

namespace sqlaug::testing {

namespace {

bool Covers(int b, int e, const std::vector<std::vector<int>>& element_links,
            const std::vector<Link>& links) {
  for (const std::vector<int>& candidates : element_links) {
    bool found = false;
    for (int li : candidates) {
      if (links[li].begin >= b && links[li].end <= e) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<int, int>> BruteForceMinimalSpan(
    int length, const std::vector<std::vector<int>>& element_links, const std::vector<Link>& links) {
  for (int len = 1; len <= length; ++len) {
    for (int b = 0; b + len <= length; ++b) {
      if (Covers(b, b + len, element_links, links)) return std::make_pair(b, b + len);
    }
  }
  return std::nullopt;
}

bool HasCoveringSubSpan(int b, int e, const std::vector<std::vector<int>>& element_links,
                        const std::vector<Link>& links) {
  for (int i = b; i < e; ++i) {
    for (int j = i + 1; j <= e; ++j) {
      if ((i != b || j != e) && Covers(i, j, element_links, links)) return true;
    }
  }
  return false;
}

}  // namespace sqlaug::testing
