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

#include "sqlaug/error.h"

#include <utility>

namespace sqlaug {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kUnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorCode::kUnproductiveNonterminal: return "UnproductiveNonterminal";
    case ErrorCode::kExhausted: return "Exhausted";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kCapExceededBeforeThreshold:
      return "CapExceededBeforeThreshold";
    case ErrorCode::kFormat: return "FormatError";
    case ErrorCode::kDanglingForeignKey: return "DanglingForeignKey";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNoCompatibleColumns: return "NoCompatibleColumns";
    case ErrorCode::kDivideByZero: return "DivideByZero";
    case ErrorCode::kTypeError: return "TypeError";
    case ErrorCode::kInvalidQuery: return "InvalidQuery";
    case ErrorCode::kUnsupportedClauseKind: return "UnsupportedClauseKind";
    case ErrorCode::kTranslationFailed: return "TranslationFailed";
    case ErrorCode::kEmptySubquestionList: return "EmptySubquestionList";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kSampleLargerThanPool: return "SampleLargerThanPool";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      message_(message) {}

namespace {

std::string DescribeSyntax(std::size_t position,
                           const std::vector<std::string>& expected,
                           const std::string& found) {
  std::string msg = "at offset " + std::to_string(position) + ", found '" +
                    found + "'";
  if (!expected.empty()) {
    msg += ", expected one of:";
    for (const std::string& e : expected) msg += " " + e;
  }
  return msg;
}

std::string DescribeUnknown(const std::string& name,
                            const std::vector<std::string>& candidates) {
  std::string msg = "'" + name + "'";
  if (!candidates.empty()) {
    msg += " (candidates:";
    for (const std::string& c : candidates) msg += " " + c;
    msg += ")";
  }
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position,
                         std::vector<std::string> expected,
                         const std::string& found)
    : Error(ErrorCode::kSyntax, DescribeSyntax(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

UnknownIdentifierError::UnknownIdentifierError(
    std::string name, std::vector<std::string> candidates)
    : Error(ErrorCode::kUnknownIdentifier, DescribeUnknown(name, candidates)),
      name_(std::move(name)),
      candidates_(std::move(candidates)) {}

}  // namespace sqlaug
