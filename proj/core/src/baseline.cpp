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

#include "rde/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rde/errors.hpp"
#include "rde/population.hpp"
#include "rde/variation.hpp"

namespace rde {

BaselineConfig BaselineConfig::for_dimension(std::size_t d) {
  BaselineConfig cfg;
  cfg.dim = d;
  cfg.max_nfes = static_cast<std::uint64_t>(10000) * d;
  cfg.n = 5 * d;
  return cfg;
}

void BaselineConfig::validate() const {
  auto fail = [](const std::string& msg) {
    throw ConfigError("baseline config: " + msg);
  };
  if (dim == 0) fail("dimension must be positive");
  if (n < 4) fail("population size must be at least 4");
  if (max_nfes <= n) fail("max_nfes must exceed the population size");
  if (!(f > 0.0) || f > 1.0) fail("f must be in (0,1]");
  if (cr < 0.0 || cr > 1.0) fail("cr must be in [0,1]");
}

RunResult baseline_de_rand1(const ObjectiveFunction& problem,
                            const BaselineConfig& config) {
  config.validate();
  if (problem.dim() != config.dim) {
    throw ConfigError("baseline config: dimension does not match problem");
  }
  const std::size_t d = config.dim;
  const double f_opt = problem.f_opt();

  RngStream rng(config.seed);
  std::uint64_t nfes = 0;

  Population pop = init_population(problem, config.n, rng);
  nfes += config.n;

  RunResult result;
  result.best = pop.members.front();

  const auto floored = [&](double fitness) {
    const double err = std::max(0.0, fitness - f_opt);
    return err < kErrorFloor ? 0.0 : err;
  };

  std::vector<TracePoint>& trace = result.trace;
  const std::vector<std::uint64_t> checkpoints =
      trace_checkpoints(config.max_nfes);
  std::size_t next_cp = 0;
  const auto observe = [&] {
    while (next_cp < checkpoints.size() && nfes >= checkpoints[next_cp]) {
      trace.push_back({checkpoints[next_cp], floored(result.best.fitness)});
      ++next_cp;
    }
  };
  observe();

  const std::size_t n = pop.size();
  while (nfes < config.max_nfes) {
    for (std::size_t i = 0; i < n && nfes < config.max_nfes; ++i) {
      std::size_t r1 = 0;
      std::size_t r2 = 0;
      std::size_t r3 = 0;
      do {
        r1 = rng.uniform_index(n);
      } while (r1 == i);
      do {
        r2 = rng.uniform_index(n);
      } while (r2 == i || r2 == r1);
      do {
        r3 = rng.uniform_index(n);
      } while (r3 == i || r3 == r1 || r3 == r2);

      const Candidate& parent = pop.members[i];
      std::vector<double> u(d);
      const std::size_t j_rand = rng.uniform_index(d);
      for (std::size_t j = 0; j < d; ++j) {
        if (j == j_rand || rng.uniform01() < config.cr) {
          u[j] = pop.members[r1].x[j] +
                 config.f * (pop.members[r2].x[j] - pop.members[r3].x[j]);
        } else {
          u[j] = parent.x[j];
        }
      }
      repair_bounds(u, parent.x, problem.bounds());

      const double fu = problem.evaluate(u);
      ++nfes;
      if (fu <= parent.fitness) {
        pop.members[i] = Candidate{std::move(u), fu, true};
        if (fu < result.best.fitness) result.best = pop.members[i];
      }
      observe();
    }
    pop.generation += 1;
  }

  result.error = floored(result.best.fitness);
  result.nfes_used = nfes;
  while (next_cp < checkpoints.size()) {
    trace.push_back({checkpoints[next_cp], result.error});
    ++next_cp;
  }
  return result;
}

}  // namespace rde
