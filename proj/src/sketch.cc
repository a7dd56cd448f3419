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

#include "sqlaug/sketch.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "sqlaug/error.h"

namespace sqlaug {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t SatMul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::size_t SatAdd(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

class Enumerator {
 public:
  Enumerator(const Grammar& g, int breadth) : g_(g), breadth_(breadth) {}

  std::size_t Count(const std::string& symbol, int depth) {
    if (!g_.IsNonterminal(symbol)) return 1;
    if (depth < 1) return 0;
    auto key = std::make_pair(symbol, depth);
    if (auto it = counts_.find(key); it != counts_.end()) return it->second;
    std::size_t total = 0;
    for (int r : g_.RulesFor(symbol)) total = SatAdd(total, CountRule(r, depth));
    counts_[key] = total;
    return total;
  }

  const std::vector<SketchNode>& Trees(const std::string& symbol, int depth) {
    auto key = std::make_pair(symbol, depth);
    if (auto it = trees_.find(key); it != trees_.end()) return it->second;
    std::vector<SketchNode> out;
    for (int r : g_.RulesFor(symbol)) {
      if (CountRule(r, depth) == 0) continue;
      const ProductionRule& rule = g_.rules()[r];
      std::vector<const std::vector<SketchNode>*> options;
      std::vector<std::vector<SketchNode>> leaves;
      leaves.reserve(rule.rhs.size());
      for (const std::string& s : rule.rhs) {
        if (g_.IsNonterminal(s)) {
          options.push_back(&Trees(s, depth - 1));
        } else {
          leaves.push_back({SketchNode{s, -1, {}}});
          options.push_back(&leaves.back());
        }
      }
      // Cartesian product, last child varying fastest.
      std::vector<std::size_t> idx(options.size(), 0);
      while (true) {
        SketchNode node{symbol, r, {}};
        for (std::size_t i = 0; i < options.size(); ++i) {
          node.children.push_back((*options[i])[idx[i]]);
        }
        out.push_back(std::move(node));
        int k = static_cast<int>(options.size()) - 1;
        while (k >= 0 && ++idx[k] == options[k]->size()) idx[k--] = 0;
        if (k < 0) break;
      }
    }
    return trees_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::size_t CountRule(int r, int depth) {
    const ProductionRule& rule = g_.rules()[r];
    if (depth < 1 || static_cast<int>(rule.rhs.size()) > breadth_) return 0;
    std::size_t product = 1;
    for (const std::string& s : rule.rhs) product = SatMul(product, Count(s, depth - 1));
    return product;
  }

  const Grammar& g_;
  int breadth_;
  std::map<std::pair<std::string, int>, std::size_t> counts_;
  std::map<std::pair<std::string, int>, std::vector<SketchNode>> trees_;
};

void Leaves(const SketchNode& n, std::vector<PatternToken>& out) {
  if (n.is_leaf()) {
    out.push_back(*ParsePatternToken(n.symbol));
    return;
  }
  for (const SketchNode& c : n.children) Leaves(c, out);
}

void Bracket(const SketchNode& n, std::string& out) {
  if (n.is_leaf()) {
    out += n.symbol;
    return;
  }
  out += "(" + n.symbol;
  for (const SketchNode& c : n.children) {
    out += ' ';
    Bracket(c, out);
  }
  out += ')';
}

}  // namespace

int TreeDepth(const SketchNode& node) {
  int d = 0;
  for (const SketchNode& c : node.children) d = std::max(d, 1 + TreeDepth(c));
  return d;
}

int TreeBreadth(const SketchNode& node) {
  int b = static_cast<int>(node.children.size());
  for (const SketchNode& c : node.children) b = std::max(b, TreeBreadth(c));
  return b;
}

Pattern SketchTree::Flatten() const {
  Pattern p;
  Leaves(root, p.tokens);
  return p;
}

std::string SketchTree::ToString() const {
  std::string out;
  Bracket(root, out);
  return out;
}

std::size_t CountSketches(const Grammar& grammar, ComplexityLevel level) {
  Enumerator e(grammar, level.breadth_cap);
  return e.Count(grammar.start(), level.depth_cap);
}

std::vector<SketchTree> EnumerateSketches(const Grammar& grammar, ComplexityLevel level,
                                          std::size_t hard_cap) {
  Enumerator e(grammar, level.breadth_cap);
  std::size_t n = e.Count(grammar.start(), level.depth_cap);
  std::string where = "depth " + std::to_string(level.depth_cap) + ", breadth " +
                      std::to_string(level.breadth_cap);
  if (n == 0) throw Error(ErrorCode::kExhausted, "no sketch within " + where);
  if (n > hard_cap) {
    throw Error(ErrorCode::kCapExceeded,
                (n == kSaturated ? std::string("too many") : std::to_string(n)) +
                    " sketches within " + where + " (cap " + std::to_string(hard_cap) + ")");
  }
  std::vector<SketchTree> out;
  out.reserve(n);
  for (const SketchNode& root : e.Trees(grammar.start(), level.depth_cap)) {
    out.push_back({root, TreeDepth(root), TreeBreadth(root)});
  }
  return out;
}

bool Recognizes(const Grammar& grammar, const Pattern& pattern) {
  struct Item {
    int rule;
    int dot;
    int origin;
    auto operator<=>(const Item&) const = default;
  };
  const auto& rules = grammar.rules();
  const std::size_t n = pattern.tokens.size();
  std::vector<std::vector<Item>> sets(n + 1);
  std::vector<std::set<Item>> seen(n + 1);
  auto add = [&](std::size_t k, Item it) {
    if (seen[k].insert(it).second) sets[k].push_back(it);
  };
  for (int r : grammar.RulesFor(grammar.start())) add(0, {r, 0, 0});
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i < sets[k].size(); ++i) {
      Item it = sets[k][i];
      const ProductionRule& rule = rules[it.rule];
      if (it.dot == static_cast<int>(rule.rhs.size())) {
        // Complete: advance items in the origin set waiting on this lhs.
        for (std::size_t j = 0; j < sets[it.origin].size(); ++j) {
          Item w = sets[it.origin][j];
          const ProductionRule& wr = rules[w.rule];
          if (w.dot < static_cast<int>(wr.rhs.size()) && wr.rhs[w.dot] == rule.lhs) {
            add(k, {w.rule, w.dot + 1, w.origin});
          }
        }
        continue;
      }
      const std::string& next = rule.rhs[it.dot];
      if (grammar.IsNonterminal(next)) {
        for (int r : grammar.RulesFor(next)) add(k, {r, 0, static_cast<int>(k)});
      } else if (k < n && PatternTokenName(pattern.tokens[k]) == next) {
        add(k + 1, {it.rule, it.dot + 1, it.origin});
      }
    }
  }
  for (const Item& it : sets[n]) {
    const ProductionRule& rule = rules[it.rule];
    if (it.origin == 0 && rule.lhs == grammar.start() &&
        it.dot == static_cast<int>(rule.rhs.size())) {
      return true;
    }
  }
  return false;
}

}  // namespace sqlaug
