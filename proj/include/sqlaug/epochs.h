// Epoch plans for the three ways of combining generated and labeled data
// when training a parser.

#ifndef SQLAUG_EPOCHS_H_
#define SQLAUG_EPOCHS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sqlaug {

enum class Strategy { kPretrain, kMerge, kSample };

std::string_view StrategyName(Strategy s);
// Throws Error(kInvalidStrategy).
Strategy ParseStrategy(std::string_view name);

struct EpochPlan {
  Strategy strategy = Strategy::kMerge;
  int epoch = 1;  // 1-based
  std::vector<int> labeled_ids;
  std::vector<int> generated_ids;
  std::uint64_t seed = 0;
  bool with_replacement = false;  // sample drew from a pool smaller than |labeled|
  friend bool operator==(const EpochPlan&, const EpochPlan&) = default;
};

struct PlanConfig {
  Strategy strategy = Strategy::kSample;
  int labeled = 0;
  int generated = 0;
  int epochs = 1;
  std::uint64_t seed = 0;
  // Pretrain: epochs spent on generated data only; the rest use labeled
  // data only. Negative means half of `epochs`, rounded up.
  int pretrain_epochs = -1;
};

// Sample plans draw |labeled| generated ids per epoch without replacement,
// independently per epoch and reproducibly from (seed, epoch). When the
// generated pool is smaller than the labeled set the draw is made with
// replacement and a warning is appended to `warnings`.
std::vector<EpochPlan> PlanEpochs(const PlanConfig& config,
                                  std::vector<std::string>* warnings = nullptr);

}  // namespace sqlaug

#endif  // SQLAUG_EPOCHS_H_
