// Deterministic template translator driven by a JSON template pack.

#ifndef SQLAUG_TEMPLATE_TRANSLATOR_H_
#define SQLAUG_TEMPLATE_TRANSLATOR_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sqlaug/translator.h"

namespace sqlaug {

// Pack layout: "templates" and "embedded" map clause kind names to lists of
// template strings with named slots ({items}, {tables}, {conditions}, ...);
// the remaining objects are phrase tables for operators, aggregates, sort
// directions and connectives. See data/templates/en.json.
//
// Variant 0 is the first template. When paraphrases are registered for the
// clause key, variants 1..P select them, and later variants continue with
// the remaining templates.
class TemplateTranslator : public Translator {
 public:
  static TemplateTranslator FromJson(std::string_view json_text);
  static TemplateTranslator Load(const std::filesystem::path& path);

  std::string id() const override { return "template:" + language_; }
  bool Supports(ClauseKind kind) const override;
  int VariantCount(const TranslationRequest& request) const override;
  std::string Translate(const TranslationRequest& request) override;

  // Registers a paraphrase for a clause key (Clause::Key()). Slots {0},
  // {1}, ... stand for ClauseElements of the clause in order.
  void AddParaphrase(const std::string& key, const std::string& slotted_text);
  // Reads paraphrases from an exported translation corpus (records with
  // "key" and "template" fields). Returns the number added.
  int LoadParaphrases(const std::filesystem::path& corpus_path);

 private:
  TemplateTranslator() = default;

  const std::vector<std::string>* Templates(ClauseKind kind, bool embedded) const;
  const std::string& Phrase(const std::string& key) const;
  const std::vector<std::string>& PhraseList(const std::string& key) const;

  std::string language_ = "en";
  std::map<std::string, std::vector<std::string>> templates_;  // "SELECT", "embedded.SELECT"
  std::map<std::string, std::string> phrases_;                 // "ops.=", "order.ASC", ...
  std::map<std::string, std::vector<std::string>> phrase_lists_;  // "connectives.UNION"
  std::map<std::string, std::vector<std::string>> paraphrases_;
};

// data/templates/en.json of the installed data directory.
std::filesystem::path DefaultTemplatePath();

}  // namespace sqlaug

#endif  // SQLAUG_TEMPLATE_TRANSLATOR_H_
