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

#include "rde/optimizer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "rde/adaptation.hpp"
#include "rde/errors.hpp"
#include "rde/mutation.hpp"
#include "rde/pressure.hpp"
#include "rde/variation.hpp"

namespace rde {

RunConfig RunConfig::for_dimension(std::size_t d) {
  RunConfig cfg;
  cfg.dim = d;
  cfg.max_nfes = static_cast<std::uint64_t>(10000) * d;
  cfg.n_max = 18 * d;
  return cfg;
}

void RunConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };
  if (dim == 0) fail("dimension must be positive");
  if (n_min < 4) fail("n_min must be at least 4");
  if (n_max < n_min) fail("n_max must be >= n_min");
  if (max_nfes <= n_max) fail("max_nfes must exceed n_max");
  if (h == 0) fail("h must be at least 1");
  if (!(p_max > 0.0) || p_max > 1.0) fail("p_max must be in (0,1]");
  if (ar < 0.0) fail("ar must be >= 0");
  if (!(mu_f_init > 0.0) || mu_f_init > 1.0) fail("mu_f_init must be in (0,1]");
  if (mu_cr_init < 0.0 || mu_cr_init > 1.0) fail("mu_cr_init must be in [0,1]");
  if (gamma_init < 0.0 || gamma_init > 1.0) fail("gamma_init must be in [0,1]");
  if (k_r < 0.0) fail("k_r must be >= 0");
  if (p_r < 0.0 || p_r > 1.0) fail("p_r must be in [0,1]");
  if (!(perturb_scale > 0.0)) fail("perturb_scale must be positive");
  if (gamma_clamp < 0.0 || gamma_clamp >= 0.5) {
    fail("gamma_clamp must be in [0, 0.5)");
  }
}

std::vector<std::uint64_t> trace_checkpoints(std::uint64_t max_nfes) {
  constexpr int kPoints = 16;
  std::vector<std::uint64_t> cps;
  cps.reserve(kPoints);
  const double log_max = std::log(static_cast<double>(max_nfes));
  for (int j = 1; j <= kPoints; ++j) {
    const double value = std::exp(log_max * j / kPoints);
    auto cp = static_cast<std::uint64_t>(std::llround(value));
    cp = std::clamp<std::uint64_t>(cp, 1, max_nfes);
    if (cps.empty() || cp > cps.back()) cps.push_back(cp);
  }
  if (cps.back() != max_nfes) cps.push_back(max_nfes);
  return cps;
}

namespace {

double floored_error(double fitness, double f_opt) {
  const double err = std::max(0.0, fitness - f_opt);
  return err < kErrorFloor ? 0.0 : err;
}

// Records every checkpoint the budget counter has crossed.
class TraceRecorder {
 public:
  explicit TraceRecorder(std::uint64_t max_nfes)
      : checkpoints_(trace_checkpoints(max_nfes)) {}

  void observe(std::uint64_t nfes, double error, std::vector<TracePoint>& out) {
    while (next_ < checkpoints_.size() && nfes >= checkpoints_[next_]) {
      out.push_back({checkpoints_[next_], error});
      ++next_;
    }
  }

  void finish(double error, std::vector<TracePoint>& out) {
    while (next_ < checkpoints_.size()) {
      out.push_back({checkpoints_[next_], error});
      ++next_;
    }
  }

 private:
  std::vector<std::uint64_t> checkpoints_;
  std::size_t next_ = 0;
};

std::size_t round_capacity(double ar, std::size_t n) {
  return static_cast<std::size_t>(std::lround(ar * static_cast<double>(n)));
}

}  // namespace

RunResult run(const ObjectiveFunction& problem, const RunConfig& config) {
  config.validate();
  if (problem.dim() != config.dim) {
    throw ConfigError("config: dimension does not match problem");
  }
  const std::size_t d = config.dim;
  const double f_opt = problem.f_opt();

  RngStream rng(config.seed);
  std::uint64_t nfes = 0;

  const std::size_t n_init = config.n_max;
  if (config.max_nfes < n_init) {
    throw ConfigError("config: budget smaller than the initial population");
  }

  Population pop = init_population(problem, n_init, rng);
  nfes += n_init;
  ExternalArchive archive(round_capacity(config.ar, pop.size()));
  ParameterMemory memory(config.h, config.mu_f_init, config.mu_cr_init);
  double gamma1 = config.gamma_init;

  // Pressure coefficients per flag semantics: enable_rsp=false means k_r = 0
  // everywhere; rsp_scope=r1r2 keeps the elite (pbest) draw uniform.
  const double kr_main = config.enable_rsp ? config.k_r : 0.0;
  const double kr_pbest =
      (config.enable_rsp && config.rsp_scope == RspScope::all) ? config.k_r
                                                               : 0.0;
  const double p_r = config.enable_cauchy_perturb ? config.p_r : 0.0;

  std::vector<double> perturb_scale(d, config.perturb_scale);
  if (config.perturb_scale_mode == PerturbScaleMode::range_relative) {
    for (std::size_t j = 0; j < d; ++j) {
      perturb_scale[j] = config.perturb_scale *
                         (problem.bounds().upper[j] - problem.bounds().lower[j]);
    }
  }

  RunResult result;
  result.best = pop.members.front();
  TraceRecorder recorder(config.max_nfes);
  recorder.observe(nfes, floored_error(result.best.fitness, f_opt),
                   result.trace);

  std::uint64_t k = 1;
  while (nfes < config.max_nfes) {
    const std::size_t n = pop.size();

    StrategyAssignment assignment;
    if (config.enable_ord_pbest) {
      assignment = assign_strategies(n, gamma1, rng, config.gamma_clamp);
    } else {
      assignment.labels.assign(n, MutationStrategy::pbest);
      assignment.gamma1 = 0.0;
    }

    const RspSelector selector(pop, archive, kr_pbest, kr_main);
    const double p_gen = p_schedule(config.p_max, nfes, config.max_nfes);

    SuccessRecords records;
    std::vector<double> improvements1;
    std::vector<double> improvements2;
    std::size_t trials1 = 0;
    std::size_t trials2 = 0;
    std::vector<Candidate> defeated;

    for (std::size_t i = 0; i < n && nfes < config.max_nfes; ++i) {
      const std::size_t slot = config.memory_index == MemoryIndexMode::cyclic
                                   ? memory_slot(k, config.h)
                                   : rng.uniform_index(config.h);
      const FCr fcr =
          sample_f_cr_at(memory, slot, nfes, config.max_nfes, rng);

      const double p = config.p_update == PUpdateMode::per_individual
                           ? p_schedule(config.p_max, nfes, config.max_nfes)
                           : p_gen;
      const RspPicks picks = selector.sample(i, elite_count(p, n), rng);

      const Candidate& parent = pop.members[i];
      const Candidate& pbest = pop.members[picks.pbest];
      const Candidate& r1 = pop.members[picks.r1];
      const Candidate& r2 = picks.r2.is_archive()
                                ? archive.members()[picks.r2.index]
                                : pop.members[picks.r2.index];

      std::vector<double> v;
      const bool strat1 =
          assignment.labels[i] == MutationStrategy::order_pbest;
      if (strat1) {
        v = mutate_ord_pbest(parent.x, fcr.f, {pbest.x, pbest.fitness},
                             {r1.x, r1.fitness}, {r2.x, r2.fitness});
        ++trials1;
      } else {
        v = mutate_pbest(parent.x, fcr.f, pbest.x, r1.x, r2.x);
        ++trials2;
      }

      std::vector<double> u = crossover_perturb(parent.x, v, fcr.cr, p_r,
                                                perturb_scale, rng);
      repair_bounds(u, parent.x, problem.bounds());

      const double fu = problem.evaluate(u);
      ++nfes;

      const SelectionOutcome outcome = select_survivor(parent.fitness, fu);
      if (outcome.success) {
        records.add(fcr.f, fcr.cr, outcome.improvement);
        (strat1 ? improvements1 : improvements2)
            .push_back(outcome.improvement);
        defeated.push_back(parent);
      }
      if (outcome.offspring_survives) {
        pop.members[i] = Candidate{std::move(u), fu, true};
        if (fu < result.best.fitness) result.best = pop.members[i];
      }
      recorder.observe(nfes, floored_error(result.best.fitness, f_opt),
                       result.trace);
    }

    for (Candidate& c : defeated) archive.insert(std::move(c), rng);
    memory = update_memory(memory, records, k);
    if (config.enable_ord_pbest) {
      gamma1 = update_gamma(improvements1, improvements2, trials1, trials2,
                            config.gamma_clamp)
                   .gamma1;
    }

    pop.sort_by_fitness();
    if (config.enable_lpsr) {
      pop.shrink_to(
          population_schedule(config.n_max, config.n_min, nfes,
                              config.max_nfes));
    }
    archive.resize_capacity(round_capacity(config.ar, pop.size()), rng);

    ++k;
    pop.generation = k;
  }

  result.error = floored_error(result.best.fitness, f_opt);
  result.nfes_used = nfes;
  recorder.finish(result.error, result.trace);
  return result;
}

namespace {

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double parsed = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError("override " + key + ": cannot parse real '" + value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::uint64_t parsed = 0;
  const auto* begin = value.data();
  const auto* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, parsed);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("override " + key + ": cannot parse integer '" + value +
                      "'");
  }
  return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("override " + key + ": expected true/false, got '" + value +
                    "'");
}

}  // namespace

RunConfig apply_overrides(
    const RunConfig& config,
    const std::map<std::string, std::string>& overrides) {
  RunConfig out = config;
  for (const auto& [key, value] : overrides) {
    if (key == "max_nfes") {
      out.max_nfes = parse_uint(key, value);
    } else if (key == "n_max") {
      out.n_max = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key == "n_min") {
      out.n_min = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key == "h") {
      out.h = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key == "seed") {
      out.seed = parse_uint(key, value);
    } else if (key == "p_max") {
      out.p_max = parse_real(key, value);
    } else if (key == "ar") {
      out.ar = parse_real(key, value);
    } else if (key == "mu_f_init") {
      out.mu_f_init = parse_real(key, value);
    } else if (key == "mu_cr_init") {
      out.mu_cr_init = parse_real(key, value);
    } else if (key == "gamma_init") {
      out.gamma_init = parse_real(key, value);
    } else if (key == "k_r") {
      out.k_r = parse_real(key, value);
    } else if (key == "p_r") {
      out.p_r = parse_real(key, value);
    } else if (key == "perturb_scale") {
      out.perturb_scale = parse_real(key, value);
    } else if (key == "gamma_clamp") {
      out.gamma_clamp = parse_real(key, value);
    } else if (key == "enable_ord_pbest") {
      out.enable_ord_pbest = parse_bool(key, value);
    } else if (key == "enable_rsp") {
      out.enable_rsp = parse_bool(key, value);
    } else if (key == "enable_cauchy_perturb") {
      out.enable_cauchy_perturb = parse_bool(key, value);
    } else if (key == "enable_lpsr") {
      out.enable_lpsr = parse_bool(key, value);
    } else if (key == "rsp_scope") {
      if (value == "r1r2") {
        out.rsp_scope = RspScope::r1r2;
      } else if (value == "all") {
        out.rsp_scope = RspScope::all;
      } else {
        throw ConfigError("override rsp_scope: expected r1r2|all, got '" +
                          value + "'");
      }
    } else if (key == "memory_index") {
      if (value == "cyclic") {
        out.memory_index = MemoryIndexMode::cyclic;
      } else if (value == "random") {
        out.memory_index = MemoryIndexMode::random;
      } else {
        throw ConfigError(
            "override memory_index: expected cyclic|random, got '" + value +
            "'");
      }
    } else if (key == "perturb_scale_mode") {
      if (value == "absolute") {
        out.perturb_scale_mode = PerturbScaleMode::absolute;
      } else if (value == "range_relative") {
        out.perturb_scale_mode = PerturbScaleMode::range_relative;
      } else {
        throw ConfigError(
            "override perturb_scale_mode: expected absolute|range_relative, "
            "got '" +
            value + "'");
      }
    } else if (key == "p_update") {
      if (value == "per_individual") {
        out.p_update = PUpdateMode::per_individual;
      } else if (value == "per_generation") {
        out.p_update = PUpdateMode::per_generation;
      } else {
        throw ConfigError(
            "override p_update: expected per_individual|per_generation, got "
            "'" +
            value + "'");
      }
    } else {
      throw ConfigError("unknown config override: " + key);
    }
  }
  return out;
}

}  // namespace rde
