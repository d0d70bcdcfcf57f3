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

#include "rde/adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rde {

namespace {

constexpr double kTerminalValue = 0.9;
constexpr double kSampleScale = 0.1;

double lehmer(const std::vector<double>& values,
              const std::vector<double>& weights) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t n = 0; n < values.size(); ++n) {
    num += weights[n] * values[n] * values[n];
    den += weights[n] * values[n];
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace

ParameterMemory::ParameterMemory(std::size_t h, double mu_f_init,
                                 double mu_cr_init) {
  if (h == 0) throw std::invalid_argument("ParameterMemory: H must be >= 1");
  mu_f.assign(h, mu_f_init);
  mu_cr.assign(h, mu_cr_init);
  mu_f.back() = kTerminalValue;
  mu_cr.back() = kTerminalValue;
}

void SuccessRecords::add(double f, double cr, double improvement) {
  s_f.push_back(f);
  s_cr.push_back(cr);
  improvements.push_back(improvement);
}

std::size_t memory_slot(std::uint64_t k, std::size_t h) {
  if (k == 0) throw std::invalid_argument("memory_slot: generations are 1-based");
  return static_cast<std::size_t>((k - 1) % h);
}

FCr sample_f_cr_at(const ParameterMemory& memory, std::size_t slot,
                   std::uint64_t nfes, std::uint64_t max_nfes, RngStream& rng) {
  FCr out;
  do {
    out.f = rng.cauchy(memory.mu_f[slot], kSampleScale);
  } while (out.f <= 0.0);
  out.f = std::min(out.f, 1.0);

  out.cr = std::clamp(rng.normal(memory.mu_cr[slot], kSampleScale), 0.0, 1.0);

  const double progress =
      static_cast<double>(nfes) / static_cast<double>(max_nfes);
  if (progress < 0.6 && out.f > 0.7) out.f = 0.7;
  if (progress < 0.25 && out.cr < 0.7) {
    out.cr = 0.7;
  } else if (progress < 0.5 && out.cr < 0.6) {
    out.cr = 0.6;
  }
  return out;
}

FCr sample_f_cr(const ParameterMemory& memory, std::uint64_t k,
                std::uint64_t nfes, std::uint64_t max_nfes, RngStream& rng) {
  return sample_f_cr_at(memory, memory_slot(k, memory.slots()), nfes, max_nfes,
                        rng);
}

ParameterMemory update_memory(const ParameterMemory& memory,
                              const SuccessRecords& records, std::uint64_t k) {
  if (records.empty()) return memory;
  const std::size_t slot = memory_slot(k, memory.slots());
  if (slot == memory.slots() - 1) return memory;  // terminal slot frozen

  const double total = std::accumulate(records.improvements.begin(),
                                       records.improvements.end(), 0.0);
  std::vector<double> weights(records.improvements.size());
  for (std::size_t n = 0; n < weights.size(); ++n) {
    weights[n] = total > 0.0
                     ? records.improvements[n] / total
                     : 1.0 / static_cast<double>(weights.size());
  }

  ParameterMemory next = memory;
  next.mu_f[slot] = lehmer(records.s_f, weights);
  next.mu_cr[slot] = lehmer(records.s_cr, weights);
  return next;
}

GammaState update_gamma(const std::vector<double>& improvements1,
                        const std::vector<double>& improvements2,
                        std::size_t trials1, std::size_t trials2,
                        double gamma_clamp) {
  auto mean_over_trials = [](const std::vector<double>& impr,
                             std::size_t trials) {
    if (trials == 0) return 0.0;
    return std::accumulate(impr.begin(), impr.end(), 0.0) /
           static_cast<double>(trials);
  };
  GammaState next;
  next.n1 = trials1;
  next.n2 = trials2;
  next.omega_m1 = mean_over_trials(improvements1, trials1);
  next.omega_m2 = mean_over_trials(improvements2, trials2);
  const double total = next.omega_m1 + next.omega_m2;
  next.gamma1 = total > 0.0 ? next.omega_m1 / total : 0.5;
  next.gamma1 = std::clamp(next.gamma1, gamma_clamp, 1.0 - gamma_clamp);
  return next;
}

double p_schedule(double p_max, std::uint64_t nfes, std::uint64_t max_nfes) {
  return p_max * (1.0 - 0.5 * static_cast<double>(nfes) /
                            static_cast<double>(max_nfes));
}

std::size_t elite_count(double p, std::size_t n) {
  const auto raw = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(n)));
  return std::min(std::max<std::size_t>(raw, 2), n);
}

std::size_t population_schedule(std::size_t n_max, std::size_t n_min,
                                std::uint64_t nfes, std::uint64_t max_nfes) {
  const double slope = (static_cast<double>(n_min) - static_cast<double>(n_max)) /
                       static_cast<double>(max_nfes);
  const auto n = static_cast<std::size_t>(
      std::lround(slope * static_cast<double>(nfes) +
                  static_cast<double>(n_max)));
  return std::clamp(n, n_min, n_max);
}

}  // namespace rde
