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

#ifndef RDE_BASELINE_HPP_
#define RDE_BASELINE_HPP_

#include <cstddef>
#include <cstdint>

#include "rde/optimizer.hpp"
#include "rde/problems.hpp"

namespace rde {

/// Minimal DE/rand/1/bin comparison baseline: fixed F, Cr, and population
/// size, same bound repair, selection rule, error floor, and trace schema as
/// the main optimizer.
struct BaselineConfig {
  std::size_t dim = 0;
  std::uint64_t max_nfes = 0;
  std::size_t n = 0;  // population size, default 5 D
  double f = 0.5;
  double cr = 0.9;
  std::uint64_t seed = 0;

  static BaselineConfig for_dimension(std::size_t d);
  void validate() const;  // throws ConfigError
};

RunResult baseline_de_rand1(const ObjectiveFunction& problem,
                            const BaselineConfig& config);

}  // namespace rde

#endif  // RDE_BASELINE_HPP_
