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

#include <array>
#include <cstdint>
#include <stdexcept>

namespace subtime::piflink {

enum class Direction : std::uint8_t { Forward = 0, Backward = 1 };

using Payload = std::array<std::uint8_t, 8>;

struct Slice {
  Payload payload{};
  std::uint64_t seq = 0;
  Direction direction = Direction::Forward;

  friend bool operator==(const Slice&, const Slice&) = default;
};

/// Payload bytes reversed, direction flipped, seq kept. An involution.
Slice echo(const Slice& s);

/// Little-endian packing: byte k holds bits 8k..8k+7.
std::uint64_t payload_bits(const Payload& p);
Payload payload_from_bits(std::uint64_t bits);

inline constexpr std::size_t kFrameSize = 16;
inline constexpr std::uint64_t kSeqMask = (std::uint64_t{1} << 48) - 1;

using Frame = std::array<std::uint8_t, kFrameSize>;

class FrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 8-byte payload, 6-byte little-endian seq (truncated to 48 bits), one
/// direction byte (0 forward, 1 backward), one flags byte.
Frame encode_frame(const Slice& s, std::uint8_t flags = 0);

struct DecodedFrame {
  Slice slice;
  std::uint8_t flags = 0;
};

/// Throws FrameError on a direction byte other than 0 or 1.
DecodedFrame decode_frame(const Frame& f);

}  // namespace subtime::piflink
