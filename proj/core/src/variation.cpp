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

#include "rde/variation.hpp"

#include <algorithm>

namespace rde {

std::vector<double> crossover_perturb(std::span<const double> parent,
                                      std::span<const double> trial, double cr,
                                      double p_r,
                                      std::span<const double> perturb_scale,
                                      RngStream& rng) {
  const std::size_t d = parent.size();
  std::vector<double> u(d);
  const std::size_t j_rand = rng.uniform_index(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == j_rand) {
      u[j] = trial[j];
      continue;
    }
    if (rng.uniform01() < cr) {
      u[j] = trial[j];
    } else if (p_r > 0.0 && rng.uniform01() < p_r) {
      u[j] = rng.cauchy(parent[j], perturb_scale[j]);
    } else {
      u[j] = parent[j];
    }
  }
  return u;
}

std::vector<double> crossover_perturb(std::span<const double> parent,
                                      std::span<const double> trial, double cr,
                                      double p_r, double perturb_scale,
                                      RngStream& rng) {
  const std::vector<double> scales(parent.size(), perturb_scale);
  return crossover_perturb(parent, trial, cr, p_r,
                           std::span<const double>(scales), rng);
}

void repair_bounds(std::span<double> u, std::span<const double> parent,
                   const Bounds& bounds) {
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < bounds.lower[j]) {
      u[j] = (bounds.lower[j] + parent[j]) / 2.0;
    } else if (u[j] > bounds.upper[j]) {
      u[j] = (bounds.upper[j] + parent[j]) / 2.0;
    }
  }
}

SelectionOutcome select_survivor(double parent_fitness,
                                 double offspring_fitness) {
  SelectionOutcome out;
  out.offspring_survives = offspring_fitness <= parent_fitness;
  out.success = offspring_fitness < parent_fitness;
  out.improvement = std::max(0.0, parent_fitness - offspring_fitness);
  return out;
}

}  // namespace rde
