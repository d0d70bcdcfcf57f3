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

#ifndef RDE_MUTATION_HPP_
#define RDE_MUTATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "rde/rng.hpp"

namespace rde {

enum class MutationStrategy {
  order_pbest,  // Strat1: current-to-order-pbest/1
  pbest,        // Strat2: current-to-pbest/1
};

/// Per-generation operator assignment. gamma1 is the realized (clamped)
/// fraction of order-pbest individuals; exactly round(gamma1 * N) labels are
/// Strat1 and the partition is uniformly random.
struct StrategyAssignment {
  std::vector<MutationStrategy> labels;
  double gamma1 = 0.5;

  std::size_t count(MutationStrategy s) const;
};

/// A donor: decision vector plus the fitness used for order sorting.
struct Pick {
  std::span<const double> x;
  double fitness = 0.0;
};

/// v = x_i + F (x_pbest - x_i) + F (x_r1 - x_r2). No bound repair here.
std::vector<double> mutate_pbest(std::span<const double> xi, double f,
                                 std::span<const double> x_pbest,
                                 std::span<const double> x_r1,
                                 std::span<const double> x_r2);

/// Sorts the three picks ascending by fitness into (best, median, worst) and
/// applies v = x_i + F (x_best - x_i) + F (x_median - x_worst). Ties keep the
/// argument order (stable), so the result is deterministic.
std::vector<double> mutate_ord_pbest(std::span<const double> xi, double f,
                                     Pick a, Pick b, Pick c);

/// Clamps gamma1 to [gamma_clamp, 1 - gamma_clamp], labels round(gamma1 * N)
/// individuals Strat1, and shuffles the labels. Consumes max(N-1, 0) draws.
StrategyAssignment assign_strategies(std::size_t n, double gamma1,
                                     RngStream& rng, double gamma_clamp = 0.1);

}  // namespace rde

#endif  // RDE_MUTATION_HPP_
