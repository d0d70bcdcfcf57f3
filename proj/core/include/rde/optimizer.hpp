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

#ifndef RDE_OPTIMIZER_HPP_
#define RDE_OPTIMIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rde/population.hpp"
#include "rde/problems.hpp"

namespace rde {

enum class RspScope { r1r2, all };
enum class MemoryIndexMode { cyclic, random };
enum class PerturbScaleMode { absolute, range_relative };
enum class PUpdateMode { per_individual, per_generation };

/// Full algorithm configuration. Defaults follow the reference settings;
/// for_dimension fills the dimension-dependent ones (max_nfes = 10000 D,
/// N_max = 18 D). The flags carve individual strategies out for ablations.
struct RunConfig {
  std::size_t dim = 0;
  std::uint64_t max_nfes = 0;
  std::size_t n_max = 0;
  std::size_t n_min = 4;
  std::size_t h = 5;
  double p_max = 0.25;
  double ar = 1.0;
  double mu_f_init = 0.3;
  double mu_cr_init = 0.8;
  double gamma_init = 0.5;
  double k_r = 3.0;
  double p_r = 0.2;
  double perturb_scale = 0.1;
  double gamma_clamp = 0.1;
  std::uint64_t seed = 0;

  bool enable_ord_pbest = true;
  bool enable_rsp = true;
  RspScope rsp_scope = RspScope::all;
  bool enable_cauchy_perturb = true;
  bool enable_lpsr = true;
  MemoryIndexMode memory_index = MemoryIndexMode::cyclic;
  PerturbScaleMode perturb_scale_mode = PerturbScaleMode::absolute;
  PUpdateMode p_update = PUpdateMode::per_individual;

  static RunConfig for_dimension(std::size_t d);
  void validate() const;  // throws ConfigError
};

/// Errors below this are reported as exactly 0.
inline constexpr double kErrorFloor = 1e-8;

struct TracePoint {
  std::uint64_t nfes = 0;
  double error = 0.0;
};

struct RunResult {
  Candidate best;
  double error = 0.0;
  std::uint64_t nfes_used = 0;
  std::vector<TracePoint> trace;
};

/// The 16 logarithmically spaced budget checkpoints used by the trace,
/// deduplicated and ending at max_nfes.
std::vector<std::uint64_t> trace_checkpoints(std::uint64_t max_nfes);

/// Runs the full algorithm on one problem. Deterministic: one RNG stream
/// seeded from config.seed, consumed in a fixed documented order
/// (initialization; then per generation: strategy assignment, and per
/// individual: memory slot when randomized, F, Cr, donor indices, crossover
/// and perturbation draws; then archive insertions and capacity eviction).
/// Throws ConfigError on invalid config, dimension mismatch, or a budget
/// smaller than the initial population.
RunResult run(const ObjectiveFunction& problem, const RunConfig& config);

/// Returns a copy of config with named overrides applied. Keys match the
/// field names above (dimension excluded); unknown keys or unparsable values
/// raise ConfigError. Empty overrides return the config unchanged.
RunConfig apply_overrides(const RunConfig& config,
                          const std::map<std::string, std::string>& overrides);

}  // namespace rde

#endif  // RDE_OPTIMIZER_HPP_
