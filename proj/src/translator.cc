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

#include "sqlaug/translator.h"

#include <exception>

#include "sqlaug/error.h"

namespace sqlaug {

namespace {

std::string Trim(const std::string& s) {
  const char* ws = " \t\r\n";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

int PickVariant(const Clause& clause, const TranslationRequest& request,
                Translator& translator, std::optional<int> variant,
                const VariantPolicy& policy) {
  if (variant) return *variant;
  if (!policy) return 0;
  return policy(clause, translator.VariantCount(request));
}

std::string Run(const Clause& clause, Translator& translator, std::optional<int> variant,
                const Schema* schema, const VariantPolicy& policy, bool embedded,
                int* used_variant) {
  if (!translator.Supports(clause.kind)) {
    throw Error(ErrorCode::kUnsupportedClauseKind,
                std::string(ClauseKindName(clause.kind)) + " is not supported by " +
                    translator.id());
  }
  TranslationRequest request;
  request.clause = &clause;
  request.schema = schema;
  request.embedded = embedded;
  // Subqueries first: their noun phrases become part of the outer clause.
  for (const std::vector<Clause>& sub : clause.nested) {
    std::string phrase;
    for (const Clause& inner : sub) {
      std::string text = Run(inner, translator, std::nullopt, schema, policy, true, nullptr);
      if (!phrase.empty()) phrase.push_back(' ');
      phrase += text;
    }
    request.nested_texts.push_back(std::move(phrase));
  }
  request.variant = PickVariant(clause, request, translator, variant, policy);
  if (used_variant) *used_variant = request.variant;
  std::string text;
  try {
    text = Trim(translator.Translate(request));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kTranslationFailed, e.what());
  }
  if (text.empty()) {
    throw Error(ErrorCode::kTranslationFailed,
                "empty subquestion for " + std::string(ClauseKindName(clause.kind)));
  }
  return text;
}

}  // namespace

Subquestion TranslateClause(const Clause& clause, Translator& translator,
                            std::optional<int> variant, const Schema* schema,
                            const VariantPolicy& policy) {
  Subquestion out;
  out.kind = clause.kind;
  int used = 0;
  out.text = Run(clause, translator, variant, schema, policy, false, &used);
  out.variant = used;
  return out;
}

}  // namespace sqlaug
