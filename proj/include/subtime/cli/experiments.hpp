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
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subtime/cli/report.hpp"

namespace subtime::cli {

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownExperiment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParamSpec {
  std::string name;  ///< flag name without dashes, e.g. "echo-loss"
  std::string default_value;
  std::string help;
};

/// String-valued parameters with typed, validating accessors.
class ParamTable {
 public:
  ParamTable(const std::vector<ParamSpec>& specs, const std::map<std::string, std::string>& given);

  double number(const std::string& name) const;
  long long integer(const std::string& name) const;
  bool flag(const std::string& name) const;
  const std::string& text(const std::string& name) const;
  /// Comma-separated numbers.
  std::vector<double> numbers(const std::string& name) const;
  /// The raw comma-separated tokens of a list parameter.
  std::vector<std::string> tokens(const std::string& name) const;

  /// Parameters as JSON, numbers and booleans typed, in declaration order.
  Json to_json(const std::vector<ParamSpec>& specs) const;

 private:
  std::map<std::string, std::string> values_;
};

struct Experiment {
  std::string name;
  std::string topic;
  std::vector<ParamSpec> params;
  std::function<Report(const ParamTable&, std::uint64_t seed)> run;
};

/// All experiments in listing order.
const std::vector<Experiment>& registry();

/// Throws UnknownExperiment.
const Experiment& find_experiment(std::string_view name);

/// One line per experiment: name, then topic.
std::string list_experiments();

}  // namespace subtime::cli
