// Translator served by an external process. Each request is one JSON line on
// the child's stdin:
//   {"kind":"WHERE","tokens":[...],"types":[...],"variant":0,
//    "embedded":false,"nested":[...]}
// and the child answers with one line of subquestion text on stdout.

#ifndef SQLAUG_SUBPROCESS_TRANSLATOR_H_
#define SQLAUG_SUBPROCESS_TRANSLATOR_H_

#include <cstdio>
#include <mutex>
#include <set>
#include <string>
#include <sys/types.h>

#include "sqlaug/translator.h"

namespace sqlaug {

class SubprocessTranslator : public Translator {
 public:
  // `command` runs under /bin/sh -c. An empty `kinds` set means all kinds.
  explicit SubprocessTranslator(std::string command, std::set<ClauseKind> kinds = {});
  ~SubprocessTranslator() override;
  SubprocessTranslator(const SubprocessTranslator&) = delete;
  SubprocessTranslator& operator=(const SubprocessTranslator&) = delete;

  std::string id() const override { return "subprocess:" + command_; }
  bool Supports(ClauseKind kind) const override;
  bool thread_safe() const override { return false; }
  std::string Translate(const TranslationRequest& request) override;

  // The request line sent for `request`, without the trailing newline.
  static std::string EncodeRequest(const TranslationRequest& request);

 private:
  void Close();

  std::string command_;
  std::set<ClauseKind> kinds_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  std::FILE* from_child_ = nullptr;
  std::mutex mu_;
};

}  // namespace sqlaug

#endif  // SQLAUG_SUBPROCESS_TRANSLATOR_H_
