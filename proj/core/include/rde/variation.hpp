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

#ifndef RDE_VARIATION_HPP_
#define RDE_VARIATION_HPP_

#include <span>
#include <vector>

#include "rde/problems.hpp"
#include "rde/rng.hpp"

namespace rde {

/// Binomial crossover with a Cauchy escape hatch. Per dimension j:
///   j == j_rand or rand < Cr  ->  trial_j
///   else rand < p_r           ->  Cauchy(parent_j, perturb_scale_j)
///   else                      ->  parent_j
/// Branch draws are sequential: the p_r test draws only when the Cr test
/// failed, and not at all when p_r == 0. j_rand consumes one draw up front
/// and its dimension consumes none.
std::vector<double> crossover_perturb(std::span<const double> parent,
                                      std::span<const double> trial, double cr,
                                      double p_r,
                                      std::span<const double> perturb_scale,
                                      RngStream& rng);

/// Uniform perturbation scale across dimensions.
std::vector<double> crossover_perturb(std::span<const double> parent,
                                      std::span<const double> trial, double cr,
                                      double p_r, double perturb_scale,
                                      RngStream& rng);

/// Midpoint repair: coordinates beyond a bound move to the midpoint between
/// the violated bound and the (feasible) parent coordinate. In place.
void repair_bounds(std::span<double> u, std::span<const double> parent,
                   const Bounds& bounds);

struct SelectionOutcome {
  bool offspring_survives = false;  // f(u) <= f(x)
  bool success = false;             // strict improvement only
  double improvement = 0.0;         // max(0, f(x) - f(u))
};

/// Eq. 4 survivor selection on fitness values. Ties replace the parent but
/// count as no success, so memory, gamma, and the archive stay untouched.
SelectionOutcome select_survivor(double parent_fitness,
                                 double offspring_fitness);

}  // namespace rde

#endif  // RDE_VARIATION_HPP_
