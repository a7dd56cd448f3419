// Clause-to-subquestion translation. A Translator is a plug-in: the shipped
// implementations are table-driven templates and an external process that
// speaks a line-delimited JSON protocol.

#ifndef SQLAUG_TRANSLATOR_H_
#define SQLAUG_TRANSLATOR_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqlaug/clause.h"
#include "sqlaug/schema.h"

namespace sqlaug {

struct Subquestion {
  std::string text;
  ClauseKind kind = ClauseKind::kSelect;
  std::optional<int> variant;
};

struct TranslationRequest {
  const Clause* clause = nullptr;
  const Schema* schema = nullptr;  // natural names; may be null
  int variant = 0;
  // Render as a noun phrase inside an enclosing clause (subquery content).
  bool embedded = false;
  // Already translated subqueries of the clause, one per clause->nested entry.
  std::vector<std::string> nested_texts;
};

class Translator {
 public:
  virtual ~Translator() = default;

  // Recorded as provenance of generated questions.
  virtual std::string id() const = 0;
  virtual bool Supports(ClauseKind kind) const = 0;
  virtual int VariantCount(const TranslationRequest& /*request*/) const { return 1; }
  // When false, callers must not invoke Translate concurrently.
  virtual bool thread_safe() const { return true; }
  // Returns the subquestion text. Throws Error(kTranslationFailed) on failure.
  virtual std::string Translate(const TranslationRequest& request) = 0;
};

// Picks the variant for a clause given the number of variants available.
using VariantPolicy = std::function<int(const Clause& clause, int variant_count)>;

// Translates one clause. Subqueries are translated first (as embedded noun
// phrases) and handed to the outer clause. Throws UnsupportedClauseKind and
// TranslationFailed.
Subquestion TranslateClause(const Clause& clause, Translator& translator,
                            std::optional<int> variant = std::nullopt,
                            const Schema* schema = nullptr,
                            const VariantPolicy& policy = nullptr);

}  // namespace sqlaug

#endif  // SQLAUG_TRANSLATOR_H_
