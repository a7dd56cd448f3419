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

#include "sqlaug/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "sqlaug/error.h"

namespace sqlaug {
namespace {

constexpr std::array<std::string_view, 23> kKeywords = {
    "SELECT", "DISTINCT", "FROM",   "AS",      "JOIN",   "ON",
    "WHERE",  "GROUP",    "BY",     "HAVING",  "ORDER",  "LIMIT",
    "ASC",    "DESC",     "AND",    "OR",      "NOT",    "IN",
    "LIKE",   "BETWEEN",  "INTERSECT", "UNION", "EXCEPT"};

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         (static_cast<unsigned char>(c) >= 0x80);
}

bool IsIdentChar(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}

}  // namespace

bool IsReservedWord(std::string_view upper) {
  if (upper == "GROUP_BY" || upper == "ORDER_BY" || upper == "INNER") return true;
  return std::find(kKeywords.begin(), kKeywords.end(), upper) != kKeywords.end();
}

std::vector<LexToken> Lex(std::string_view text) {
  std::vector<LexToken> raw;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '\'' || c == '"') {
      const char quote = c;
      std::string value;
      ++i;
      bool closed = false;
      while (i < n) {
        if (text[i] == quote) {
          if (i + 1 < n && text[i + 1] == quote) {
            value.push_back(quote);
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        value.push_back(text[i++]);
      }
      if (!closed) throw SyntaxError(start, {"closing quote"}, "end of input");
      raw.push_back({LexKind::kString, std::move(value), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
      if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
          i = j;
          while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        }
      }
      raw.push_back({LexKind::kNumber, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (IsIdentStart(c) || c == '`') {
      std::string ident;
      auto read_part = [&]() {
        if (i < n && text[i] == '`') {
          std::size_t close = text.find('`', i + 1);
          if (close == std::string_view::npos) {
            throw SyntaxError(i, {"closing backtick"}, "end of input");
          }
          ident += text.substr(i + 1, close - i - 1);
          i = close + 1;
          return;
        }
        while (i < n && IsIdentChar(text[i])) ident.push_back(text[i++]);
      };
      read_part();
      while (i + 1 < n && text[i] == '.' && (IsIdentStart(text[i + 1]) || text[i + 1] == '`')) {
        ident.push_back('.');
        ++i;
        read_part();
      }
      std::string upper = Upper(ident);
      if (IsReservedWord(upper)) {
        if (upper == "GROUP_BY") upper = "GROUP BY";
        if (upper == "ORDER_BY") upper = "ORDER BY";
        raw.push_back({LexKind::kKeyword, upper, start});
      } else {
        raw.push_back({LexKind::kIdent, std::move(ident), start});
      }
      continue;
    }
    static constexpr std::array<std::string_view, 4> kTwoChar = {"!=", "<>", ">=", "<="};
    bool matched = false;
    for (std::string_view op : kTwoChar) {
      if (text.substr(i, 2) == op) {
        raw.push_back({LexKind::kSymbol, op == "<>" ? "!=" : std::string(op), start});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("(),*+-/=<>;").find(c) != std::string_view::npos) {
      raw.push_back({LexKind::kSymbol, std::string(1, c), start});
      ++i;
      continue;
    }
    throw SyntaxError(start, {}, std::string(1, c));
  }

  // Fold two-word keywords and drop a trailing semicolon.
  std::vector<LexToken> out;
  out.reserve(raw.size() + 1);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const LexToken& t = raw[k];
    if (t.kind == LexKind::kSymbol && t.text == ";" && k + 1 == raw.size()) break;
    if (t.kind == LexKind::kKeyword && k + 1 < raw.size() &&
        raw[k + 1].kind == LexKind::kKeyword) {
      const std::string& next = raw[k + 1].text;
      if ((t.text == "GROUP" || t.text == "ORDER") && next == "BY") {
        out.push_back({LexKind::kKeyword, t.text + " BY", t.offset});
        ++k;
        continue;
      }
      if (t.text == "NOT" && next == "IN") {
        out.push_back({LexKind::kKeyword, "NOT IN", t.offset});
        ++k;
        continue;
      }
    }
    if (t.kind == LexKind::kKeyword && t.text == "INNER") continue;  // INNER JOIN
    out.push_back(t);
  }
  out.push_back({LexKind::kEnd, "", text.size()});
  return out;
}

std::vector<std::string> LexTexts(std::string_view text) {
  std::vector<std::string> out;
  for (const LexToken& t : Lex(text)) {
    if (t.kind == LexKind::kEnd) break;
    if (t.kind == LexKind::kString) {
      std::string quoted = "'";
      for (char c : t.text) {
        quoted.push_back(c);
        if (c == '\'') quoted.push_back('\'');
      }
      quoted.push_back('\'');
      out.push_back(std::move(quoted));
    } else {
      out.push_back(t.text);
    }
  }
  return out;
}

}  // namespace sqlaug
