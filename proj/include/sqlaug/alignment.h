// String-match alignment between a question and the clauses of its SQL,
// used to mine clause/subquestion pairs from labeled data.

#ifndef SQLAUG_ALIGNMENT_H_
#define SQLAUG_ALIGNMENT_H_

#include <string>
#include <vector>

#include "sqlaug/ast.h"
#include "sqlaug/clause.h"
#include "sqlaug/schema.h"

namespace sqlaug {

inline constexpr int kMaxNgram = 6;

// Question tokens [begin, end) matched to a database element.
struct Link {
  int begin = 0;
  int end = 0;
  ClauseElement element;
  friend bool operator==(const Link&, const Link&) = default;
};

struct TokenAlignment {
  std::vector<Link> links;  // sorted by (begin, end)
};

// Matches question n-grams (n <= kMaxNgram) against the natural names and
// values of the elements the query mentions. Among overlapping matches the
// longer one wins; equal spans may link several elements.
TokenAlignment LinkSchema(const std::vector<std::string>& question_tokens, const Query& q,
                          const Schema* schema);

enum class Confidence { kLow, kHigh };

struct ClausePair {
  int question_id = 0;
  int clause_index = 0;  // position in Decompose(q)
  Clause clause;
  int begin = 0;  // subquestion tokens [begin, end)
  int end = 0;
  std::string subquestion;
  // Subquestion with the linked element spans replaced by {0}, {1}, ...
  // in ClauseElements order.
  std::string slotted;
  Confidence confidence = Confidence::kLow;
  int variant = 0;
};

// Shortest span covering one link per element, leftmost on ties. Returns
// false when some element has no link. `chosen` receives the link index
// picked for each element.
bool MinimalCoveringSpan(const std::vector<std::vector<int>>& element_links,
                         const std::vector<Link>& links, int* begin, int* end,
                         std::vector<int>* chosen = nullptr);

struct ExtractStats {
  int clauses = 0;  // SET_OP clauses are not counted
  int aligned = 0;
};

// One pair per clause whose elements are all linked.
std::vector<ClausePair> ExtractPairs(const std::vector<std::string>& question_tokens,
                                     const Query& q, const TokenAlignment& alignment,
                                     const Schema* schema, int question_id = 0,
                                     ExtractStats* stats = nullptr);

// Drops every pair whose span contains another pair's span of the same
// question (equal spans drop both). Survivors are marked high confidence.
std::vector<ClausePair> FilterPairs(std::vector<ClausePair> pairs);

}  // namespace sqlaug

#endif  // SQLAUG_ALIGNMENT_H_
