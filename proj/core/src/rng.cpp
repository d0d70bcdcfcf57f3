// Copyright 2026 The RDE Authors.
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

#include "rde/rng.hpp"

#include <cmath>
#include <numbers>

namespace rde {

double RngStream::normal(double mean, double sigma) {
  // 1 - u01 lies in (0, 1], keeping the log argument positive.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::cauchy(double location, double scale) {
  const double u = uniform01();
  return location + scale * std::tan(std::numbers::pi * (u - 0.5));
}

}  // namespace rde
