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

#ifndef SQLAUG_ERROR_H_
#define SQLAUG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqlaug {

enum class ErrorCode {
  kSyntax,
  kUnknownIdentifier,
  kParse,
  kUndeclaredSymbol,
  kUnproductiveNonterminal,
  kExhausted,
  kCapExceeded,
  kEmptyCorpus,
  kCapExceededBeforeThreshold,
  kFormat,
  kDanglingForeignKey,
  kDuplicateName,
  kArityMismatch,
  kTypeMismatch,
  kDisconnected,
  kNoCompatibleColumns,
  kDivideByZero,
  kTypeError,
  kInvalidQuery,
  kUnsupportedClauseKind,
  kTranslationFailed,
  kEmptySubquestionList,
  kInvalidStrategy,
  kSampleLargerThanPool,
  kIo,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base class of every error raised by the library. The code identifies the
// failure class; the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  // The message without the code prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& found);

  // Byte offset into the input text.
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnknownIdentifierError : public Error {
 public:
  UnknownIdentifierError(std::string name, std::vector<std::string> candidates);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& candidates() const { return candidates_; }

 private:
  std::string name_;
  std::vector<std::string> candidates_;
};

}  // namespace sqlaug

#endif  // SQLAUG_ERROR_H_
