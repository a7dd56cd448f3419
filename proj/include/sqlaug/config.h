// Run configuration: "key = value" lines, '#' comments. Every key has a
// default, so an empty file is a complete configuration.

#ifndef SQLAUG_CONFIG_H_
#define SQLAUG_CONFIG_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "sqlaug/augment.h"
#include "sqlaug/epochs.h"

namespace sqlaug {

struct RunConfig {
  AugmentConfig augment;
  PlanConfig plan;
};

// Throws Error(kFormat) on malformed lines, unknown keys or bad values.
RunConfig ParseConfig(std::string_view text, RunConfig base = {});
RunConfig LoadConfig(const std::filesystem::path& path, RunConfig base = {});

// The resolved configuration in the same format, keys sorted.
std::string DescribeConfig(const RunConfig& config);

}  // namespace sqlaug

#endif  // SQLAUG_CONFIG_H_
