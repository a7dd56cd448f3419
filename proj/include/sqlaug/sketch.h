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

#ifndef SQLAUG_SKETCH_H_
#define SQLAUG_SKETCH_H_

#include <cstddef>
#include <string>
#include <vector>

#include "sqlaug/grammar.h"
#include "sqlaug/pattern.h"

namespace sqlaug {

struct SketchNode {
  std::string symbol;
  int rule = -1;  // -1 for terminal leaves
  std::vector<SketchNode> children;

  bool is_leaf() const { return rule < 0; }
  friend bool operator==(const SketchNode&, const SketchNode&) = default;
};

struct SketchTree {
  SketchNode root;
  int depth = 0;    // edges on the longest root-to-leaf path
  int breadth = 0;  // most children of any node

  Pattern Flatten() const;
  // Bracketed derivation, e.g. "(SQLs (SQL (Select SELECT A)))".
  std::string ToString() const;
  friend bool operator==(const SketchTree&, const SketchTree&) = default;
};

int TreeDepth(const SketchNode& node);
int TreeBreadth(const SketchNode& node);

struct ComplexityLevel {
  int depth_cap = 3;
  int breadth_cap = 2;
  friend bool operator==(const ComplexityLevel&, const ComplexityLevel&) = default;
};

inline constexpr std::size_t kDefaultHardCap = 1'000'000;

// All derivation trees from the start symbol within the caps, ordered by rule
// index lexicographically. Throws Exhausted when there are none and
// CapExceeded when there would be more than hard_cap.
std::vector<SketchTree> EnumerateSketches(const Grammar& grammar, ComplexityLevel level,
                                          std::size_t hard_cap = kDefaultHardCap);

// Number of trees EnumerateSketches would return (saturating).
std::size_t CountSketches(const Grammar& grammar, ComplexityLevel level);

// Earley recognizer: does the start symbol derive exactly this token string?
bool Recognizes(const Grammar& grammar, const Pattern& pattern);

}  // namespace sqlaug

#endif  // SQLAUG_SKETCH_H_
