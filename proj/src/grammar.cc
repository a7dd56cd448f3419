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

#include "sqlaug/grammar.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "sqlaug/error.h"
#include "sqlaug/pattern.h"

#ifndef SQLAUG_DATA_DIR
#define SQLAUG_DATA_DIR "data"
#endif

namespace sqlaug {

namespace {

const std::vector<int> kNoRules;

bool IsSymbolName(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

Grammar::Grammar(std::vector<ProductionRule> rules, std::string start)
    : start_(std::move(start)), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto [it, inserted] = by_lhs_.try_emplace(rules_[i].lhs);
    if (inserted) nonterminals_.push_back(rules_[i].lhs);
    it->second.push_back(static_cast<int>(i));
  }
  if (!by_lhs_.count(start_)) {
    throw Error(ErrorCode::kParse, "start symbol '" + start_ + "' has no rule");
  }
  for (const ProductionRule& r : rules_) {
    for (const std::string& s : r.rhs) {
      if (!IsNonterminal(s) && !ParsePatternToken(s)) {
        throw Error(ErrorCode::kUndeclaredSymbol,
                    s + " (line " + std::to_string(r.line) + ")");
      }
    }
  }
  std::set<std::string, std::less<>> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ProductionRule& r : rules_) {
      if (productive.count(r.lhs)) continue;
      bool ok = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const std::string& s) {
        return !IsNonterminal(s) || productive.count(s);
      });
      if (ok) {
        productive.insert(r.lhs);
        changed = true;
      }
    }
  }
  std::string bad;
  for (const std::string& n : nonterminals_) {
    if (productive.count(n)) continue;
    if (!bad.empty()) bad += ", ";
    bad += n;
  }
  if (!bad.empty()) throw Error(ErrorCode::kUnproductiveNonterminal, bad);
}

std::vector<std::string> Grammar::terminals() const {
  std::vector<std::string> out;
  for (const ProductionRule& r : rules_) {
    for (const std::string& s : r.rhs) {
      if (!IsNonterminal(s) && std::find(out.begin(), out.end(), s) == out.end()) {
        out.push_back(s);
      }
    }
  }
  return out;
}

bool Grammar::IsNonterminal(std::string_view symbol) const {
  return by_lhs_.find(symbol) != by_lhs_.end();
}

const std::vector<int>& Grammar::RulesFor(std::string_view nonterminal) const {
  auto it = by_lhs_.find(nonterminal);
  return it == by_lhs_.end() ? kNoRules : it->second;
}

const ProductionRule* Grammar::FindRule(std::string_view lhs,
                                        const std::vector<std::string>& rhs) const {
  for (int i : RulesFor(lhs)) {
    if (rules_[i].rhs == rhs) return &rules_[i];
  }
  return nullptr;
}

Grammar ParseGrammar(std::string_view text) {
  std::vector<ProductionRule> rules;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (SplitWords(line).empty()) continue;
    std::size_t arrow = line.find("->");
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + why);
    };
    if (arrow == std::string::npos) fail("expected 'LHS -> RHS'");
    std::vector<std::string> lhs = SplitWords(std::string_view(line).substr(0, arrow));
    if (lhs.size() != 1 || !IsSymbolName(lhs[0])) fail("left-hand side must be one symbol");
    std::string rest = line.substr(arrow + 2);
    std::size_t begin = 0;
    while (true) {
      std::size_t bar = rest.find('|', begin);
      std::vector<std::string> rhs =
          SplitWords(std::string_view(rest).substr(begin, bar == std::string::npos
                                                              ? std::string::npos
                                                              : bar - begin));
      if (rhs.empty()) fail("empty right-hand side");
      for (const std::string& s : rhs) {
        if (!IsSymbolName(s)) fail("bad symbol '" + s + "'");
      }
      rules.push_back({lhs[0], std::move(rhs), line_no});
      if (bar == std::string::npos) break;
      begin = bar + 1;
    }
  }
  if (rules.empty()) throw Error(ErrorCode::kParse, "grammar has no rules");
  return Grammar(std::move(rules));
}

Grammar LoadGrammar(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseGrammar(buf.str());
}

std::filesystem::path DefaultGrammarPath() {
  return std::filesystem::path(SQLAUG_DATA_DIR) / "astg.default";
}

}  // namespace sqlaug
