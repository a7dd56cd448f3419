// Question tokenization and the normalization used for string matching
// between question n-grams and database elements.

#ifndef SQLAUG_TEXT_NORM_H_
#define SQLAUG_TEXT_NORM_H_

#include <string>
#include <string_view>
#include <vector>

namespace sqlaug {

// Splits on whitespace and detaches leading/trailing punctuation (quotes,
// brackets, , . ; : ? !) into tokens of their own.
std::vector<std::string> TokenizeQuestion(std::string_view question);

// One word: numbers in canonical form, otherwise lower-cased with
// punctuation removed and a plural "s" stripped. Empty for pure punctuation.
std::string NormalizeWord(std::string_view word);

// A phrase: underscores become spaces, words are normalized and joined by
// single spaces.
std::string NormalizePhrase(std::string_view text);

}  // namespace sqlaug

#endif  // SQLAUG_TEXT_NORM_H_
