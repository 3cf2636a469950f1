// Copyright 2026 The Subtime Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "subtime/cli/experiments.hpp"

namespace subtime::cli {

enum ExitCode : int {
  kOk = 0,
  kInvariantViolation = 1,
  kUsageError = 2,
  kOutputError = 3,
};

enum class Format { Json, Csv, Svg };

/// Parses "json,csv,svg" (any subset, any order). Throws InvalidParameter.
std::vector<Format> parse_formats(const std::string& list);

struct ExperimentConfig {
  std::string experiment;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 2026;
  std::filesystem::path out_dir = ".";
  std::vector<Format> formats = {Format::Json};
};

/// Runs one experiment and fills report.experiment and report.config.
/// Throws UnknownExperiment or InvalidParameter.
Report run_experiment(const ExperimentConfig& cfg);

/// Writes <out_dir>/<experiment>.<ext> for each format. Returns the paths.
/// Throws std::runtime_error when a file cannot be written.
std::vector<std::filesystem::path> write_outputs(const Report& report,
                                                 const ExperimentConfig& cfg);

/// Full command line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subtime::cli
