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

#include "rde/population.hpp"

#include <algorithm>

#include "rde/errors.hpp"

namespace rde {

void Population::sort_by_fitness() {
  std::stable_sort(members.begin(), members.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.fitness < b.fitness;
                   });
}

void Population::shrink_to(std::size_t n) {
  if (n < members.size()) members.resize(n);
}

void ExternalArchive::insert(Candidate defeated_parent, RngStream& rng) {
  if (capacity_ == 0) return;
  if (members_.size() < capacity_) {
    members_.push_back(std::move(defeated_parent));
    return;
  }
  members_[rng.uniform_index(members_.size())] = std::move(defeated_parent);
}

void ExternalArchive::resize_capacity(std::size_t capacity, RngStream& rng) {
  capacity_ = capacity;
  while (members_.size() > capacity_) {
    members_.erase(members_.begin() +
                   static_cast<std::ptrdiff_t>(rng.uniform_index(members_.size())));
  }
}

Population init_population(const ObjectiveFunction& problem, std::size_t n,
                           RngStream& rng) {
  if (n < 4) throw ConfigError("population size must be at least 4");
  problem.bounds().validate();

  const std::size_t d = problem.dim();
  Population pop;
  pop.members.resize(n);
  for (Candidate& c : pop.members) {
    c.x.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      c.x[j] = rng.uniform(problem.bounds().lower[j], problem.bounds().upper[j]);
    }
    c.fitness = problem.evaluate(c.x);
    c.fresh = true;
  }
  pop.generation = 1;
  pop.sort_by_fitness();
  return pop;
}

}  // namespace rde
