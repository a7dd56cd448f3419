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

#include "sqlaug/alignment.h"

#include <algorithm>
#include <climits>
#include <map>

#include "sqlaug/text_norm.h"

namespace sqlaug {

namespace {

std::string JoinTokens(const std::vector<std::string>& tokens, int begin, int end) {
  std::string out;
  for (int i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace

TokenAlignment LinkSchema(const std::vector<std::string>& question_tokens, const Query& q,
                          const Schema* schema) {
  std::vector<ClauseElement> elements;
  for (const Clause& c : Decompose(q)) {
    for (ClauseElement& e : ClauseElements(c, schema)) {
      if (std::find(elements.begin(), elements.end(), e) == elements.end()) {
        elements.push_back(std::move(e));
      }
    }
  }
  const int n = static_cast<int>(question_tokens.size());
  std::vector<std::string> norm(n);
  for (int i = 0; i < n; ++i) norm[i] = NormalizeWord(question_tokens[i]);

  struct Candidate {
    int begin, end, element;
  };
  std::vector<Candidate> candidates;
  for (int e = 0; e < static_cast<int>(elements.size()); ++e) {
    std::string target = NormalizePhrase(elements[e].natural);
    if (target.empty()) continue;
    for (int i = 0; i < n; ++i) {
      if (norm[i].empty()) continue;
      std::string phrase;
      for (int j = i; j < n && j - i < kMaxNgram; ++j) {
        if (norm[j].empty()) continue;
        if (!phrase.empty()) phrase.push_back(' ');
        phrase += norm[j];
        if (phrase.size() > target.size()) break;
        if (phrase == target) candidates.push_back({i, j + 1, e});
      }
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.end - a.begin != b.end - b.begin) return a.end - a.begin > b.end - b.begin;
    return a.begin < b.begin;
  });
  std::vector<Candidate> accepted;
  for (const Candidate& c : candidates) {
    bool ok = true;
    for (const Candidate& a : accepted) {
      bool disjoint = c.end <= a.begin || a.end <= c.begin;
      bool same = c.begin == a.begin && c.end == a.end;
      if (!disjoint && !same) {
        ok = false;
        break;
      }
    }
    if (ok) accepted.push_back(c);
  }
  std::stable_sort(accepted.begin(), accepted.end(), [](const Candidate& a, const Candidate& b) {
    return std::pair(a.begin, a.end) < std::pair(b.begin, b.end);
  });
  TokenAlignment out;
  for (const Candidate& c : accepted) out.links.push_back({c.begin, c.end, elements[c.element]});
  return out;
}

bool MinimalCoveringSpan(const std::vector<std::vector<int>>& element_links,
                         const std::vector<Link>& links, int* begin, int* end,
                         std::vector<int>* chosen) {
  if (element_links.empty()) return false;
  std::vector<int> starts;
  for (const std::vector<int>& ids : element_links) {
    if (ids.empty()) return false;
    for (int id : ids) starts.push_back(links[id].begin);
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  int best_begin = -1, best_end = -1;
  std::vector<int> pick(element_links.size()), best_pick;
  for (int b : starts) {
    int lo = INT_MAX, hi = INT_MIN;
    bool feasible = true;
    for (std::size_t e = 0; e < element_links.size() && feasible; ++e) {
      // For a fixed left bound the link ending first is optimal.
      int best = -1;
      for (int id : element_links[e]) {
        if (links[id].begin < b) continue;
        if (best < 0 || links[id].end < links[best].end) best = id;
      }
      if (best < 0) {
        feasible = false;
        break;
      }
      pick[e] = best;
      lo = std::min(lo, links[best].begin);
      hi = std::max(hi, links[best].end);
    }
    if (!feasible) continue;
    if (best_begin < 0 || hi - lo < best_end - best_begin ||
        (hi - lo == best_end - best_begin && lo < best_begin)) {
      best_begin = lo;
      best_end = hi;
      best_pick = pick;
    }
  }
  if (best_begin < 0) return false;
  *begin = best_begin;
  *end = best_end;
  if (chosen) *chosen = best_pick;
  return true;
}

std::vector<ClausePair> ExtractPairs(const std::vector<std::string>& question_tokens,
                                     const Query& q, const TokenAlignment& alignment,
                                     const Schema* schema, int question_id,
                                     ExtractStats* stats) {
  std::vector<ClausePair> out;
  std::vector<Clause> clauses = Decompose(q);
  for (int ci = 0; ci < static_cast<int>(clauses.size()); ++ci) {
    const Clause& clause = clauses[ci];
    if (clause.kind == ClauseKind::kSetOp) continue;
    if (stats) ++stats->clauses;
    std::vector<ClauseElement> elements = ClauseElements(clause, schema);
    std::vector<std::vector<int>> element_links(elements.size());
    for (std::size_t e = 0; e < elements.size(); ++e) {
      for (int l = 0; l < static_cast<int>(alignment.links.size()); ++l) {
        if (alignment.links[l].element == elements[e]) element_links[e].push_back(l);
      }
    }
    ClausePair pair;
    std::vector<int> chosen;
    if (!MinimalCoveringSpan(element_links, alignment.links, &pair.begin, &pair.end, &chosen)) {
      continue;
    }
    if (stats) ++stats->aligned;
    pair.question_id = question_id;
    pair.clause_index = ci;
    pair.clause = clause;
    pair.subquestion = JoinTokens(question_tokens, pair.begin, pair.end);
    std::map<int, std::pair<int, int>> slot_at;  // begin -> (end, element)
    for (std::size_t e = 0; e < chosen.size(); ++e) {
      const Link& l = alignment.links[chosen[e]];
      slot_at.emplace(l.begin, std::pair(l.end, static_cast<int>(e)));
    }
    for (int i = pair.begin; i < pair.end;) {
      if (!pair.slotted.empty()) pair.slotted.push_back(' ');
      auto it = slot_at.find(i);
      if (it != slot_at.end()) {
        pair.slotted += "{" + std::to_string(it->second.second) + "}";
        i = it->second.first;
      } else {
        pair.slotted += question_tokens[i++];
      }
    }
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<ClausePair> FilterPairs(std::vector<ClausePair> pairs) {
  std::vector<ClausePair> out;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < pairs.size() && !drop; ++b) {
      if (a == b || pairs[a].question_id != pairs[b].question_id) continue;
      if (pairs[a].clause_index == pairs[b].clause_index) continue;
      drop = pairs[a].begin <= pairs[b].begin && pairs[b].end <= pairs[a].end;
    }
    if (!drop) out.push_back(pairs[a]);
  }
  for (ClausePair& p : out) p.confidence = Confidence::kHigh;
  return out;
}

}  // namespace sqlaug
