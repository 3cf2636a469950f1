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

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace subtime::cli {

using Json = nlohmann::ordered_json;

/// Equal-length named columns; the first column is the x axis for plots.
struct SeriesTable {
  std::vector<std::pair<std::string, std::vector<double>>> columns;

  bool empty() const noexcept { return columns.empty(); }
  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().second.size(); }
  /// Throws std::invalid_argument when the column length differs from the others.
  void add(std::string name, std::vector<double> values);
};

struct Report {
  std::string experiment;
  Json config = Json::object();
  Json metrics = Json::object();  ///< flat name -> number/bool/string
  SeriesTable series;
  std::vector<std::string> violations;  ///< failed invariants, empty on success
};

/// {experiment, config, metrics, series} with two-space indentation and a
/// trailing newline. Contains nothing run-dependent beyond the inputs.
std::string to_json(const Report& report);

/// Header row then one row per sample. Empty string when there is no series.
std::string to_csv(const Report& report);

/// Line plot of every column against the first. Empty string when there is
/// no series or fewer than two columns.
std::string to_svg(const Report& report);

}  // namespace subtime::cli
