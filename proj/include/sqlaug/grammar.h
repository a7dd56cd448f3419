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

#ifndef SQLAUG_GRAMMAR_H_
#define SQLAUG_GRAMMAR_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sqlaug {

struct ProductionRule {
  std::string lhs;
  std::vector<std::string> rhs;
  int line = 0;  // 1-based source line
};

// Nonterminals are the symbols that appear on a left-hand side; every other
// symbol must be a pattern token name (SELECT, A, OP, ...).
class Grammar {
 public:
  Grammar(std::vector<ProductionRule> rules, std::string start = "SQLs");

  const std::string& start() const { return start_; }
  const std::vector<ProductionRule>& rules() const { return rules_; }
  const std::vector<std::string>& nonterminals() const { return nonterminals_; }
  std::vector<std::string> terminals() const;

  bool IsNonterminal(std::string_view symbol) const;
  // Rule indices for a nonterminal, in file order.
  const std::vector<int>& RulesFor(std::string_view nonterminal) const;
  const ProductionRule* FindRule(std::string_view lhs,
                                 const std::vector<std::string>& rhs) const;

 private:
  std::string start_;
  std::vector<ProductionRule> rules_;
  std::vector<std::string> nonterminals_;
  std::map<std::string, std::vector<int>, std::less<>> by_lhs_;
};

// Format: one rule per line, `LHS -> RHS1 RHS2 ...`; `|` separates
// alternatives; `#` starts a comment. Throws Parse, UndeclaredSymbol or
// UnproductiveNonterminal.
Grammar ParseGrammar(std::string_view text);
Grammar LoadGrammar(const std::filesystem::path& path);

// The shipped default grammar file.
std::filesystem::path DefaultGrammarPath();

}  // namespace sqlaug

#endif  // SQLAUG_GRAMMAR_H_
