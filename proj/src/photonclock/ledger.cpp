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

#include "subtime/photonclock/ledger.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace subtime::photonclock {

namespace {

void check_value(int value) {
  if (value != 1 && value != -1) {
    throw std::invalid_argument("SubtimeLedger: increments must be +1 or -1");
  }
}

}  // namespace

SubtimeLedger::SubtimeLedger(std::vector<Increment> increments)
    : increments_(std::move(increments)) {
  for (const auto& inc : increments_) check_value(inc.value);
}

void SubtimeLedger::append(int value, bool decohered) {
  check_value(value);
  increments_.push_back({value, decohered});
}

std::size_t SubtimeLedger::decohered_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      increments_.begin(), increments_.end(), [](const Increment& i) { return i.decohered; }));
}

double classical_time(const SubtimeLedger& ledger) {
  long long total = 0;
  long long run = 0;
  for (const auto& inc : ledger.increments()) {
    run += inc.value;
    if (inc.decohered) {
      total += std::llabs(run);
      run = 0;
    }
  }
  return static_cast<double>(total);
}

double bare_classical_time(const SubtimeLedger& ledger) {
  long long sum = 0;
  for (const auto& inc : ledger.increments()) sum += inc.value;
  return static_cast<double>(std::llabs(sum));
}

}  // namespace subtime::photonclock
