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

#ifndef RDE_POPULATION_HPP_
#define RDE_POPULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rde/problems.hpp"
#include "rde/rng.hpp"

namespace rde {

/// One decision vector with its cached objective value. `fresh` marks the
/// cache as valid; it is false only for trial candidates awaiting evaluation.
struct Candidate {
  std::vector<double> x;
  double fitness = 0.0;
  bool fresh = false;
};

/// Population kept sorted ascending by fitness at generation boundaries,
/// so the member index doubles as the selective-pressure rank (0 = best).
struct Population {
  std::vector<Candidate> members;
  std::uint64_t generation = 1;

  std::size_t size() const { return members.size(); }
  void sort_by_fitness();
  /// Drops the worst-ranked members; requires sortedness.
  void shrink_to(std::size_t n);
};

/// Bounded pool of defeated parents. Inserting into a full archive overwrites
/// a uniformly random existing member; shrinking the capacity evicts
/// uniformly random members until the size fits.
class ExternalArchive {
 public:
  ExternalArchive() = default;
  explicit ExternalArchive(std::size_t capacity) : capacity_(capacity) {}

  void insert(Candidate defeated_parent, RngStream& rng);
  void resize_capacity(std::size_t capacity, RngStream& rng);

  const std::vector<Candidate>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t capacity() const { return capacity_; }

 private:
  std::vector<Candidate> members_;
  std::size_t capacity_ = 0;
};

/// Uniform-random initial population, fully evaluated and sorted.
/// Consumes exactly N*D uniform draws. Throws ConfigError when N < 4 or the
/// problem bounds are invalid.
Population init_population(const ObjectiveFunction& problem, std::size_t n,
                           RngStream& rng);

}  // namespace rde

#endif  // RDE_POPULATION_HPP_
