// Composition of subquestions into a full question, and the end-to-end
// SQL-to-question conversion.

#ifndef SQLAUG_QUESTION_H_
#define SQLAUG_QUESTION_H_

#include <cstddef>
#include <string>
#include <vector>

#include "sqlaug/ast.h"
#include "sqlaug/clause.h"
#include "sqlaug/translator.h"

namespace sqlaug {

// Where one subquestion ended up in the composed text.
struct QuestionFragment {
  ClauseKind kind = ClauseKind::kSelect;
  int index = 0;      // position in the composed input
  int set_side = 0;
  std::size_t begin = 0;  // byte range in ComposedQuestion::text
  std::size_t end = 0;
};

struct ComposedQuestion {
  std::string text;
  std::vector<QuestionFragment> fragments;
};

// Joins subquestions (already in execution order) with ", ", capitalizes the
// first letter and ends with "?" when the SELECT subquestion is a question,
// "." otherwise. In a set operation a right-hand SELECT subquestion equal
// to the left one is dropped, and the connective is followed by a space
// instead of a comma. A word repeated across a join boundary is kept once.
// `clauses` is parallel to `subquestions` or empty. Throws
// EmptySubquestionList.
ComposedQuestion Compose(const std::vector<Subquestion>& subquestions,
                         const std::vector<Clause>& clauses = {});

// decompose -> execution order -> translate -> compose.
ComposedQuestion SqlToQuestion(const Query& q, Translator& translator,
                               const Schema* schema = nullptr,
                               const VariantPolicy& policy = nullptr);

bool IsInterrogative(const std::string& subquestion);

}  // namespace sqlaug

#endif  // SQLAUG_QUESTION_H_
