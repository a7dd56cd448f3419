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

#include "sqlaug/text_norm.h"

#include <cctype>
#include <charconv>
#include <cmath>

#include "sqlaug/ast.h"

namespace sqlaug {

namespace {

bool IsSplitPunct(char c) {
  switch (c) {
    case ',': case '.': case ';': case ':': case '?': case '!':
    case '"': case '\'': case '(': case ')': case '[': case ']':
      return true;
    default:
      return false;
  }
}

bool ParseNumber(std::string_view w, double* out) {
  if (w.empty()) return false;
  if (w.front() == '+') w.remove_prefix(1);
  const char* end = w.data() + w.size();
  auto [ptr, ec] = std::from_chars(w.data(), end, *out);
  return ec == std::errc() && ptr == end && std::isfinite(*out);
}

}  // namespace

std::vector<std::string> TokenizeQuestion(std::string_view question) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < question.size()) {
    while (i < question.size() && std::isspace(static_cast<unsigned char>(question[i]))) ++i;
    std::size_t j = i;
    while (j < question.size() && !std::isspace(static_cast<unsigned char>(question[j]))) ++j;
    if (j == i) break;
    std::string_view word = question.substr(i, j - i);
    std::vector<std::string> tail;
    while (!word.empty() && IsSplitPunct(word.front())) {
      out.emplace_back(1, word.front());
      word.remove_prefix(1);
    }
    while (!word.empty() && IsSplitPunct(word.back())) {
      tail.emplace_back(1, word.back());
      word.remove_suffix(1);
    }
    if (!word.empty()) out.emplace_back(word);
    out.insert(out.end(), tail.rbegin(), tail.rend());
    i = j;
  }
  return out;
}

std::string NormalizeWord(std::string_view word) {
  double number = 0;
  if (ParseNumber(word, &number)) return FormatNumber(number);
  std::string out;
  for (char c : word) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (out.size() > 3 && out.back() == 's' && out[out.size() - 2] != 's') out.pop_back();
  return out;
}

std::string NormalizePhrase(std::string_view text) {
  std::string spaced(text);
  for (char& c : spaced) {
    if (c == '_') c = ' ';
  }
  std::string out;
  for (const std::string& token : TokenizeQuestion(spaced)) {
    std::string w = NormalizeWord(token);
    if (w.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

}  // namespace sqlaug
