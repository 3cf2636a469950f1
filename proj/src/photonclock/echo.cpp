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

#include "subtime/photonclock/echo.hpp"

#include <stdexcept>

namespace subtime::photonclock {

EchoResult wf_echo(double alpha, double i_transmitted) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("wf_echo: alpha outside [0,1]");
  if (!(i_transmitted >= 0.0)) throw std::invalid_argument("wf_echo: i_transmitted < 0");
  EchoResult r;
  // delta_s is rounded once; i - delta_s is then exact (Sterbenz), so the two
  // parts sum to i_transmitted with no rounding. i_reflected stays within one
  // ulp of alpha * i_transmitted.
  r.delta_s = i_transmitted - alpha * i_transmitted;
  r.i_reflected = i_transmitted - r.delta_s;
  return r;
}

}  // namespace subtime::photonclock
