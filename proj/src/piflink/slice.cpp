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

#include "subtime/piflink/slice.hpp"

#include <algorithm>

namespace subtime::piflink {

Slice echo(const Slice& s) {
  Slice r = s;
  std::reverse(r.payload.begin(), r.payload.end());
  r.direction = s.direction == Direction::Forward ? Direction::Backward : Direction::Forward;
  return r;
}

std::uint64_t payload_bits(const Payload& p) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < p.size(); ++k) bits |= std::uint64_t{p[k]} << (8 * k);
  return bits;
}

Payload payload_from_bits(std::uint64_t bits) {
  Payload p{};
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<std::uint8_t>(bits >> (8 * k));
  return p;
}

Frame encode_frame(const Slice& s, std::uint8_t flags) {
  Frame f{};
  std::copy(s.payload.begin(), s.payload.end(), f.begin());
  const std::uint64_t seq = s.seq & kSeqMask;
  for (std::size_t k = 0; k < 6; ++k) f[8 + k] = static_cast<std::uint8_t>(seq >> (8 * k));
  f[14] = static_cast<std::uint8_t>(s.direction);
  f[15] = flags;
  return f;
}

DecodedFrame decode_frame(const Frame& f) {
  if (f[14] > 1) throw FrameError("decode_frame: invalid direction byte");
  DecodedFrame out;
  std::copy(f.begin(), f.begin() + 8, out.slice.payload.begin());
  for (std::size_t k = 0; k < 6; ++k) out.slice.seq |= std::uint64_t{f[8 + k]} << (8 * k);
  out.slice.direction = static_cast<Direction>(f[14]);
  out.flags = f[15];
  return out;
}

}  // namespace subtime::piflink
