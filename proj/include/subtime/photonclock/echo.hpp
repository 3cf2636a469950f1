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

namespace subtime::photonclock {

struct EchoResult {
  double i_reflected = 0.0;
  double delta_s = 0.0;
};

/// Absorber echo: a fraction alpha of the transmitted bits returns and the
/// rest is entropy. Throws std::invalid_argument for alpha outside [0,1] or
/// negative i_transmitted.
EchoResult wf_echo(double alpha, double i_transmitted);

}  // namespace subtime::photonclock
