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

#include "sqlaug/epochs.h"

#include <numeric>

#include "sqlaug/error.h"
#include "sqlaug/random.h"

namespace sqlaug {

namespace {

std::vector<int> Range(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kPretrain: return "pretrain";
    case Strategy::kMerge: return "merge";
    case Strategy::kSample: return "sample";
  }
  return "?";
}

Strategy ParseStrategy(std::string_view name) {
  if (name == "pretrain") return Strategy::kPretrain;
  if (name == "merge") return Strategy::kMerge;
  if (name == "sample") return Strategy::kSample;
  throw Error(ErrorCode::kInvalidStrategy,
              "unknown strategy \"" + std::string(name) + "\" (pretrain, merge, sample)");
}

std::vector<EpochPlan> PlanEpochs(const PlanConfig& config, std::vector<std::string>* warnings) {
  if (config.labeled < 0 || config.generated < 0 || config.epochs < 0) {
    throw Error(ErrorCode::kInvalidArgument, "sizes and epochs must be non-negative");
  }
  const int phase1 = config.pretrain_epochs >= 0 ? std::min(config.pretrain_epochs, config.epochs)
                                                 : (config.epochs + 1) / 2;
  const bool small_pool = config.generated < config.labeled;
  if (config.strategy == Strategy::kSample && small_pool && warnings) {
    warnings->push_back(std::string(ErrorCodeName(ErrorCode::kSampleLargerThanPool)) +
                        ": generated pool of " + std::to_string(config.generated) +
                        " is smaller than " + std::to_string(config.labeled) +
                        " labeled examples; sampling with replacement");
  }
  std::vector<EpochPlan> plans;
  for (int e = 1; e <= config.epochs; ++e) {
    EpochPlan p;
    p.strategy = config.strategy;
    p.epoch = e;
    p.seed = DeriveSeed(config.seed, {static_cast<std::uint64_t>(e)});
    switch (config.strategy) {
      case Strategy::kMerge:
        p.labeled_ids = Range(config.labeled);
        p.generated_ids = Range(config.generated);
        break;
      case Strategy::kPretrain:
        if (e <= phase1) {
          p.generated_ids = Range(config.generated);
        } else {
          p.labeled_ids = Range(config.labeled);
        }
        break;
      case Strategy::kSample: {
        p.labeled_ids = Range(config.labeled);
        Rng rng(p.seed);
        if (small_pool) {
          p.with_replacement = true;
          if (config.generated > 0) {
            for (int i = 0; i < config.labeled; ++i) {
              p.generated_ids.push_back(static_cast<int>(rng.Below(config.generated)));
            }
          }
        } else {
          // Partial Fisher-Yates: the first |labeled| slots are the sample.
          std::vector<int> pool = Range(config.generated);
          for (int i = 0; i < config.labeled; ++i) {
            int j = i + static_cast<int>(rng.Below(config.generated - i));
            std::swap(pool[i], pool[j]);
          }
          p.generated_ids.assign(pool.begin(), pool.begin() + config.labeled);
        }
        break;
      }
    }
    plans.push_back(std::move(p));
  }
  return plans;
}

}  // namespace sqlaug
