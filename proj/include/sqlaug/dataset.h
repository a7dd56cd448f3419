// Generated question/SQL examples and their JSONL form.

#ifndef SQLAUG_DATASET_H_
#define SQLAUG_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sqlaug {

struct AugmentedExample {
  std::string db_id;
  std::string question;
  std::string sql;
  std::string pattern;
  int sketch_id = 0;
  std::uint64_t fill_seed = 0;
  std::string translator_id;
  friend bool operator==(const AugmentedExample&, const AugmentedExample&) = default;
};

// One object per line with the keys in declaration order.
std::string ToJsonl(const std::vector<AugmentedExample>& examples);
void WriteAugmented(const std::vector<AugmentedExample>& examples,
                    const std::filesystem::path& path);
std::vector<AugmentedExample> ParseAugmented(std::string_view jsonl);
std::vector<AugmentedExample> LoadAugmented(const std::filesystem::path& path);

}  // namespace sqlaug

#endif  // SQLAUG_DATASET_H_
