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

#include "sqlaug/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "sqlaug/error.h"

namespace sqlaug {

namespace {

std::string Trim(std::string_view s) {
  const char* ws = " \t\r";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  return std::string(s.substr(b, s.find_last_not_of(ws) - b + 1));
}

template <typename T>
T Number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kFormat, "config: bad value for " + key + ": " + value);
  }
  return out;
}

bool Bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(ErrorCode::kFormat, "config: bad value for " + key + ": " + value);
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& Setters() {
  static const std::map<std::string, Setter> kSetters = {
      {"seed", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.seed = Number<std::uint64_t>(k, v);
         c.plan.seed = c.augment.seed;
       }},
      {"threshold", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.threshold = Number<double>(k, v);
       }},
      {"start_depth", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.start_level.depth_cap = Number<int>(k, v);
       }},
      {"start_breadth", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.start_level.breadth_cap = Number<int>(k, v);
       }},
      {"max_depth", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.max_level.depth_cap = Number<int>(k, v);
       }},
      {"max_breadth", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.max_level.breadth_cap = Number<int>(k, v);
       }},
      {"hard_cap", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.hard_cap = Number<std::size_t>(k, v);
       }},
      {"max_fills", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.max_fills_per_sketch_per_db = Number<int>(k, v);
       }},
      {"attempts_per_fill", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.attempts_per_fill = Number<int>(k, v);
       }},
      {"workers", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.workers = Number<int>(k, v);
       }},
      {"random_variants", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.augment.random_variants = Bool(k, v);
       }},
      {"strategy", [](RunConfig& c, const std::string&, const std::string& v) {
         c.plan.strategy = ParseStrategy(v);
       }},
      {"epochs", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.plan.epochs = Number<int>(k, v);
       }},
      {"pretrain_epochs", [](RunConfig& c, const std::string& k, const std::string& v) {
         c.plan.pretrain_epochs = Number<int>(k, v);
       }},
  };
  return kSetters;
}

}  // namespace

RunConfig ParseConfig(std::string_view text, RunConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string body = Trim(line);
    if (body.empty()) continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kFormat, "config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = Trim(body.substr(0, eq));
    std::string value = Trim(body.substr(eq + 1));
    auto it = Setters().find(key);
    if (it == Setters().end()) {
      throw Error(ErrorCode::kFormat, "config line " + std::to_string(line_no) + ": unknown key " + key);
    }
    it->second(base, key, value);
  }
  return base;
}

RunConfig LoadConfig(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str(), std::move(base));
}

std::string DescribeConfig(const RunConfig& c) {
  const AugmentConfig& a = c.augment;
  std::map<std::string, std::string> kv = {
      {"seed", std::to_string(a.seed)},
      {"threshold", std::to_string(a.threshold)},
      {"start_depth", std::to_string(a.start_level.depth_cap)},
      {"start_breadth", std::to_string(a.start_level.breadth_cap)},
      {"max_depth", std::to_string(a.max_level.depth_cap)},
      {"max_breadth", std::to_string(a.max_level.breadth_cap)},
      {"hard_cap", std::to_string(a.hard_cap)},
      {"max_fills", std::to_string(a.max_fills_per_sketch_per_db)},
      {"attempts_per_fill", std::to_string(a.attempts_per_fill)},
      {"workers", std::to_string(a.workers)},
      {"random_variants", a.random_variants ? "true" : "false"},
      {"strategy", std::string(StrategyName(c.plan.strategy))},
      {"epochs", std::to_string(c.plan.epochs)},
      {"pretrain_epochs", std::to_string(c.plan.pretrain_epochs)},
  };
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

}  // namespace sqlaug
