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

#include <cstddef>
#include <vector>

namespace subtime::photonclock {

struct Increment {
  int value = 1;  ///< +1 for an A->B traversal, -1 for B->A
  bool decohered = false;
};

/// Signed per-traversal ticks. Values are restricted to +1 and -1.
class SubtimeLedger {
 public:
  SubtimeLedger() = default;
  /// Throws std::invalid_argument on a value other than +1 or -1.
  explicit SubtimeLedger(std::vector<Increment> increments);

  void append(int value, bool decohered = false);

  const std::vector<Increment>& increments() const noexcept { return increments_; }
  std::size_t traversal_count() const noexcept { return increments_.size(); }
  std::size_t decohered_count() const noexcept;

 private:
  std::vector<Increment> increments_;
};

/**
 * Classical time accumulated by decoherence events.
 *
 * The ledger is cut after every decohered increment; each closed run
 * contributes the absolute value of its sum. A trailing run with no
 * decohered increment is still coherent and contributes nothing, so the
 * result never decreases as increments are appended.
 */
double classical_time(const SubtimeLedger& ledger);

/// |sum of all increments|, which is not monotone under appending.
double bare_classical_time(const SubtimeLedger& ledger);

}  // namespace subtime::photonclock
