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

#include "sqlaug/question.h"

#include <cctype>
#include <map>
#include <set>
#include <string_view>

#include "sqlaug/error.h"

namespace sqlaug {

namespace {

bool IsSelectKind(ClauseKind k) {
  return k == ClauseKind::kSelect || k == ClauseKind::kSelectGroupBy;
}

// Lower-cased alphanumeric content of a word, for duplicate detection.
std::string Bare(std::string_view w) {
  std::string out;
  for (char c : w) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::string_view LastWord(std::string_view s) {
  std::size_t space = s.rfind(' ');
  return space == std::string_view::npos ? s : s.substr(space + 1);
}

bool IsSentenceEnd(char c) { return c == '.' || c == '?' || c == '!'; }

}  // namespace

bool IsInterrogative(const std::string& subquestion) {
  static const std::set<std::string> kWh = {"what", "which", "who",  "whom",
                                            "whose", "how",  "when", "where"};
  bool at_start = true;
  std::size_t i = 0;
  while (i < subquestion.size()) {
    std::size_t j = subquestion.find(' ', i);
    if (j == std::string::npos) j = subquestion.size();
    std::string_view word(subquestion.data() + i, j - i);
    if (at_start && kWh.count(Bare(word))) return true;
    at_start = !word.empty() && word.back() == ',';
    i = j + 1;
  }
  return false;
}

ComposedQuestion Compose(const std::vector<Subquestion>& subquestions,
                         const std::vector<Clause>& clauses) {
  if (subquestions.empty()) {
    throw Error(ErrorCode::kEmptySubquestionList, "no subquestions to compose");
  }
  if (!clauses.empty() && clauses.size() != subquestions.size()) {
    throw Error(ErrorCode::kInvalidArgument, "clauses and subquestions differ in length");
  }
  const int n = static_cast<int>(subquestions.size());
  std::vector<int> side(n, 0);
  int current = 0;
  for (int i = 0; i < n; ++i) {
    side[i] = clauses.empty() ? current : clauses[i].set_side;
    if (subquestions[i].kind == ClauseKind::kSetOp) current = 1;
  }

  // Keep one of two identical SELECT subquestions around a set operator.
  std::vector<bool> keep(n, true);
  int first_select[2] = {-1, -1};
  for (int i = 0; i < n; ++i) {
    if (IsSelectKind(subquestions[i].kind) && first_select[side[i]] < 0) {
      first_select[side[i]] = i;
    }
  }
  if (first_select[0] >= 0 && first_select[1] >= 0 &&
      subquestions[first_select[0]].text == subquestions[first_select[1]].text) {
    keep[first_select[1]] = false;
  }

  ComposedQuestion out;
  bool after_connective = false;
  for (int i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    std::string frag = subquestions[i].text;
    while (!frag.empty() && IsSentenceEnd(frag.back())) frag.pop_back();
    if (!out.text.empty()) {
      std::size_t space = frag.find(' ');
      if (space != std::string::npos &&
          Bare(LastWord(out.text)) == Bare(std::string_view(frag).substr(0, space))) {
        frag.erase(0, frag.find_first_not_of(' ', space));
      }
      out.text += after_connective ? " " : ", ";
    }
    QuestionFragment f;
    f.kind = subquestions[i].kind;
    f.index = i;
    f.set_side = side[i];
    f.begin = out.text.size();
    out.text += frag;
    f.end = out.text.size();
    out.fragments.push_back(f);
    after_connective = subquestions[i].kind == ClauseKind::kSetOp;
  }
  if (!out.text.empty()) {
    out.text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out.text[0])));
  }
  bool question = false;
  for (int i = 0; i < n; ++i) {
    if (IsSelectKind(subquestions[i].kind)) {
      question = IsInterrogative(subquestions[i].text);
      break;
    }
  }
  out.text.push_back(question ? '?' : '.');
  return out;
}

ComposedQuestion SqlToQuestion(const Query& q, Translator& translator, const Schema* schema,
                               const VariantPolicy& policy) {
  std::vector<Clause> clauses = ExecutionOrder(Decompose(q));
  std::vector<Subquestion> subs;
  subs.reserve(clauses.size());
  // A clause repeated on both sides of a set operation keeps one variant so
  // that the duplicate can be recognized and dropped.
  std::map<std::string, int> variant_of;
  for (const Clause& c : clauses) {
    auto it = variant_of.find(c.Text());
    std::optional<int> variant;
    if (it != variant_of.end()) variant = it->second;
    subs.push_back(TranslateClause(c, translator, variant, schema, policy));
    variant_of.emplace(c.Text(), subs.back().variant.value_or(0));
  }
  return Compose(subs, clauses);
}

}  // namespace sqlaug
