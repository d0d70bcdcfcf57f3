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

#include "rde/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rde {

std::size_t StrategyAssignment::count(MutationStrategy s) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), s));
}

std::vector<double> mutate_pbest(std::span<const double> xi, double f,
                                 std::span<const double> x_pbest,
                                 std::span<const double> x_r1,
                                 std::span<const double> x_r2) {
  const std::size_t d = xi.size();
  std::vector<double> v(d);
  for (std::size_t j = 0; j < d; ++j) {
    v[j] = xi[j] + f * (x_pbest[j] - xi[j]) + f * (x_r1[j] - x_r2[j]);
  }
  return v;
}

std::vector<double> mutate_ord_pbest(std::span<const double> xi, double f,
                                     Pick a, Pick b, Pick c) {
  Pick picks[3] = {a, b, c};
  std::stable_sort(std::begin(picks), std::end(picks),
                   [](const Pick& lhs, const Pick& rhs) {
                     return lhs.fitness < rhs.fitness;
                   });
  return mutate_pbest(xi, f, picks[0].x, picks[1].x, picks[2].x);
}

StrategyAssignment assign_strategies(std::size_t n, double gamma1,
                                     RngStream& rng, double gamma_clamp) {
  if (gamma1 < 0.0 || gamma1 > 1.0) {
    throw std::invalid_argument("assign_strategies: gamma1 outside [0,1]");
  }
  StrategyAssignment out;
  out.gamma1 = std::clamp(gamma1, gamma_clamp, 1.0 - gamma_clamp);
  const auto n1 = static_cast<std::size_t>(
      std::lround(out.gamma1 * static_cast<double>(n)));
  out.labels.assign(n, MutationStrategy::pbest);
  std::fill_n(out.labels.begin(), std::min(n1, n),
              MutationStrategy::order_pbest);
  rng.shuffle(out.labels);
  return out;
}

}  // namespace rde
