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

#ifndef SQLAUG_LEXER_H_
#define SQLAUG_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sqlaug {

enum class LexKind { kKeyword, kIdent, kNumber, kString, kSymbol, kEnd };

// Keywords are upper-cased; two-word keywords ("GROUP BY", "ORDER BY",
// "NOT IN") are single tokens and the underscore spellings are aliases.
// Identifiers keep their spelling; `a.b` is one identifier token. Strings are
// unquoted.
struct LexToken {
  LexKind kind;
  std::string text;
  std::size_t offset;
};

// Throws SyntaxError on unterminated strings or unexpected characters.
std::vector<LexToken> Lex(std::string_view text);

// Token texts of a SQL string as the writer would emit them; strings come back
// re-quoted with single quotes.
std::vector<std::string> LexTexts(std::string_view text);

bool IsReservedWord(std::string_view upper);

}  // namespace sqlaug

#endif  // SQLAUG_LEXER_H_
