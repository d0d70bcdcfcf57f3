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

#ifndef RDE_ADAPTATION_HPP_
#define RDE_ADAPTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rde/rng.hpp"

namespace rde {

/// Success-history memory of H slots. The terminal slot is pinned at 0.9 for
/// both parameters and never updated.
struct ParameterMemory {
  std::vector<double> mu_f;
  std::vector<double> mu_cr;

  ParameterMemory() = default;
  ParameterMemory(std::size_t h, double mu_f_init, double mu_cr_init);

  std::size_t slots() const { return mu_f.size(); }
};

/// F/Cr values of strictly improving trials plus their fitness improvements.
struct SuccessRecords {
  std::vector<double> s_f;
  std::vector<double> s_cr;
  std::vector<double> improvements;

  bool empty() const { return s_f.empty(); }
  void add(double f, double cr, double improvement);
};

/// Dual-strategy resource allocation. gamma2 is implied (1 - gamma1).
struct GammaState {
  double gamma1 = 0.5;
  double omega_m1 = 0.0;
  double omega_m2 = 0.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  double gamma2() const { return 1.0 - gamma1; }
};

/// Cyclic 0-based slot for generation k (1-based): (k-1) mod H.
std::size_t memory_slot(std::uint64_t k, std::size_t h);

struct FCr {
  double f = 0.0;
  double cr = 0.0;
};

/// Draws F ~ Cauchy(mu_f[slot], 0.1), resampled while F <= 0 and truncated to
/// 1, and Cr ~ Normal(mu_cr[slot], 0.1) clipped to [0,1]; then applies the
/// staged constraints: F capped at 0.7 before 60% of the budget; Cr floored
/// at 0.7 before 25% and at 0.6 before 50%.
FCr sample_f_cr_at(const ParameterMemory& memory, std::size_t slot,
                   std::uint64_t nfes, std::uint64_t max_nfes, RngStream& rng);

/// Contract form: slot chosen cyclically from the generation counter.
FCr sample_f_cr(const ParameterMemory& memory, std::uint64_t k,
                std::uint64_t nfes, std::uint64_t max_nfes, RngStream& rng);

/// Weighted Lehmer-mean update of the slot for generation k. Empty records or
/// the terminal slot leave the memory unchanged. A zero Lehmer denominator
/// (all successful values 0, possible for Cr) writes 0.
ParameterMemory update_memory(const ParameterMemory& memory,
                              const SuccessRecords& records, std::uint64_t k);

/// omega_m = total improvement / trials for each strategy (0 when a strategy
/// had no trials); gamma1 = omega_m1/(omega_m1+omega_m2), 0.5 when both are
/// zero, clamped to [gamma_clamp, 1 - gamma_clamp].
GammaState update_gamma(const std::vector<double>& improvements1,
                        const std::vector<double>& improvements2,
                        std::size_t trials1, std::size_t trials2,
                        double gamma_clamp = 0.1);

/// Linear greediness reduction: p = p_max (1 - 0.5 nfes / max_nfes).
double p_schedule(double p_max, std::uint64_t nfes, std::uint64_t max_nfes);

/// Elite subset size: max(2, ceil(p N)), never above N.
std::size_t elite_count(double p, std::size_t n);

/// Linear population size reduction:
/// N = round((N_min - N_max)/max_nfes * nfes + N_max).
std::size_t population_schedule(std::size_t n_max, std::size_t n_min,
                                std::uint64_t nfes, std::uint64_t max_nfes);

}  // namespace rde

#endif  // RDE_ADAPTATION_HPP_
