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

#include "sqlaug/dataset.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sqlaug/error.h"

namespace sqlaug {

std::string ToJsonl(const std::vector<AugmentedExample>& examples) {
  std::string out;
  for (const AugmentedExample& e : examples) {
    nlohmann::ordered_json rec;
    rec["db_id"] = e.db_id;
    rec["question"] = e.question;
    rec["sql"] = e.sql;
    rec["pattern"] = e.pattern;
    rec["sketch_id"] = e.sketch_id;
    rec["fill_seed"] = e.fill_seed;
    rec["translator_id"] = e.translator_id;
    out += rec.dump();
    out.push_back('\n');
  }
  return out;
}

void WriteAugmented(const std::vector<AugmentedExample>& examples,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << ToJsonl(examples);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

std::vector<AugmentedExample> ParseAugmented(std::string_view jsonl) {
  std::vector<AugmentedExample> out;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      nlohmann::json rec = nlohmann::json::parse(line);
      AugmentedExample e;
      e.db_id = rec.at("db_id").get<std::string>();
      e.question = rec.at("question").get<std::string>();
      e.sql = rec.at("sql").get<std::string>();
      e.pattern = rec.value("pattern", "");
      e.sketch_id = rec.value("sketch_id", 0);
      e.fill_seed = rec.value("fill_seed", std::uint64_t{0});
      e.translator_id = rec.value("translator_id", "");
      out.push_back(std::move(e));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<AugmentedExample> LoadAugmented(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseAugmented(ss.str());
}

}  // namespace sqlaug
