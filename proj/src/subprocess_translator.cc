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

#include "sqlaug/subprocess_translator.h"

#include <csignal>
#include <cstring>
#include <ctime>
#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#include "sqlaug/error.h"

namespace sqlaug {

namespace {

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kTranslationFailed, what);
}

// Writes all of `data`, reporting a closed pipe as an error instead of
// raising SIGPIPE.
bool WriteAll(int fd, const std::string& data) {
  sigset_t block, old;
  sigemptyset(&block);
  sigaddset(&block, SIGPIPE);
  pthread_sigmask(SIG_BLOCK, &block, &old);
  bool ok = true;
  std::size_t done = 0;
  while (done < data.size()) {
    ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      ok = false;
      break;
    }
    done += static_cast<std::size_t>(n);
  }
  if (!ok) {
    timespec zero{0, 0};
    sigtimedwait(&block, nullptr, &zero);
  }
  pthread_sigmask(SIG_SETMASK, &old, nullptr);
  return ok;
}

}  // namespace

SubprocessTranslator::SubprocessTranslator(std::string command, std::set<ClauseKind> kinds)
    : command_(std::move(command)), kinds_(std::move(kinds)) {
  int in_pipe[2], out_pipe[2];
  if (pipe2(in_pipe, O_CLOEXEC) != 0) Fail("pipe: " + std::string(std::strerror(errno)));
  if (pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    Fail("pipe: " + std::string(std::strerror(errno)));
  }
  pid_ = fork();
  if (pid_ < 0) Fail("fork: " + std::string(std::strerror(errno)));
  if (pid_ == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = fdopen(out_pipe[0], "r");
}

SubprocessTranslator::~SubprocessTranslator() { Close(); }

void SubprocessTranslator::Close() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_) std::fclose(from_child_);
  to_child_ = -1;
  from_child_ = nullptr;
  if (pid_ > 0) {
    int status = 0;
    waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

bool SubprocessTranslator::Supports(ClauseKind kind) const {
  return kinds_.empty() || kinds_.count(kind) > 0;
}

std::string SubprocessTranslator::EncodeRequest(const TranslationRequest& request) {
  nlohmann::json tokens = nlohmann::json::array();
  nlohmann::json types = nlohmann::json::array();
  for (const SqlToken& t : request.clause->tokens) {
    tokens.push_back(t.text);
    types.push_back(std::string(TokenTypeName(t.type)));
  }
  nlohmann::ordered_json req;
  req["kind"] = std::string(ClauseKindName(request.clause->kind));
  req["tokens"] = std::move(tokens);
  req["types"] = std::move(types);
  req["variant"] = request.variant;
  req["embedded"] = request.embedded;
  req["nested"] = request.nested_texts;
  return req.dump();
}

std::string SubprocessTranslator::Translate(const TranslationRequest& request) {
  std::lock_guard<std::mutex> lock(mu_);
  if (to_child_ < 0 || !from_child_) Fail(id() + " is not running");
  if (!WriteAll(to_child_, EncodeRequest(request) + "\n")) Fail(id() + " closed its input");
  char* line = nullptr;
  std::size_t cap = 0;
  ssize_t n = getline(&line, &cap, from_child_);
  if (n < 0) {
    std::free(line);
    Fail(id() + " exited without answering");
  }
  std::string text(line, static_cast<std::size_t>(n));
  std::free(line);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

}  // namespace sqlaug
