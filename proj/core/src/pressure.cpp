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

#include "rde/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rde {

namespace {

constexpr int kResampleCap = 100;

}  // namespace

RankWeights rank_weights(std::size_t m, double k_r) {
  if (m == 0) throw std::invalid_argument("rank_weights: empty selection");
  if (k_r < 0.0) throw std::invalid_argument("rank_weights: k_r must be >= 0");
  RankWeights rw;
  rw.k_r = k_r;
  rw.weights.resize(m);
  for (std::size_t i = 1; i <= m; ++i) {
    rw.weights[i - 1] = k_r * static_cast<double>(m - i) + 1.0;
  }
  const double total = std::accumulate(rw.weights.begin(), rw.weights.end(), 0.0);
  rw.probs.resize(m);
  for (std::size_t i = 0; i < m; ++i) rw.probs[i] = rw.weights[i] / total;
  return rw;
}

DiscreteSampler::DiscreteSampler(std::span<const double> weights) {
  cdf_.resize(weights.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    cdf_[i] = acc;
  }
}

std::size_t DiscreteSampler::sample(RngStream& rng) const {
  return sample_prefix(cdf_.size(), rng);
}

std::size_t DiscreteSampler::sample_prefix(std::size_t m, RngStream& rng) const {
  const double u = rng.uniform01() * cdf_[m - 1];
  const auto it = std::upper_bound(cdf_.begin(), cdf_.begin() + m, u);
  const auto idx = static_cast<std::size_t>(it - cdf_.begin());
  return idx < m ? idx : m - 1;
}

RspSelector::RspSelector(const Population& pop, const ExternalArchive& archive,
                         double k_r_pbest, double k_r_main)
    : pop_size_(pop.size()), k_r_pbest_(k_r_pbest), k_r_main_(k_r_main) {
  const std::size_t n = pop.size();
  const std::size_t a = archive.size();
  if (n == 0) throw std::invalid_argument("RspSelector: empty population");

  pop_main_ = DiscreteSampler(rank_weights(n, k_r_main).weights);

  // Joint ranking: the population is already sorted; merge the archive in by
  // fitness, population winning ties so equal fitness yields adjacent,
  // deterministic ranks.
  std::vector<std::size_t> arch_order(a);
  std::iota(arch_order.begin(), arch_order.end(), std::size_t{0});
  std::stable_sort(arch_order.begin(), arch_order.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return archive.members()[lhs].fitness <
                            archive.members()[rhs].fitness;
                   });
  joint_.reserve(n + a);
  std::size_t pi = 0;
  std::size_t ai = 0;
  while (pi < n || ai < a) {
    const bool take_pop =
        ai == a || (pi < n && !(archive.members()[arch_order[ai]].fitness <
                                pop.members[pi].fitness));
    if (take_pop) {
      joint_.push_back({MemberRef::Source::population, pi++});
    } else {
      joint_.push_back({MemberRef::Source::archive, arch_order[ai++]});
    }
  }
  joint_main_ = DiscreteSampler(rank_weights(n + a, k_r_main).weights);
}

namespace {

// Exact draw over the allowed subset once rejection has run out of retries.
template <typename WeightAt, typename Allowed>
std::size_t filtered_draw(std::size_t m, WeightAt weight_at, Allowed allowed,
                          RngStream& rng) {
  std::vector<std::size_t> candidates;
  std::vector<double> weights;
  for (std::size_t j = 0; j < m; ++j) {
    if (!allowed(j)) continue;
    candidates.push_back(j);
    weights.push_back(weight_at(j));
  }
  if (candidates.empty()) {
    throw std::invalid_argument("RSP sampling: no distinct candidate available");
  }
  const DiscreteSampler sampler{std::span<const double>(weights)};
  return candidates[sampler.sample(rng)];
}

double rank_weight(std::size_t rank, std::size_t m, double k_r) {
  return k_r * static_cast<double>(m - 1 - rank) + 1.0;
}

// Rank weights re-applied at subset size m form an arithmetic series, so the
// elite draw inverts the closed-form partial sum
//   S(t) = t + k_r * t * (2m - t - 1) / 2
// instead of materializing a table per subset size. One uniform draw.
std::size_t sample_elite(std::size_t m, double k_r, RngStream& rng) {
  if (k_r == 0.0 || m == 1) return rng.uniform_index(m);
  auto partial = [&](std::size_t t) {
    const double td = static_cast<double>(t);
    return td + k_r * td * (2.0 * static_cast<double>(m) - td - 1.0) / 2.0;
  };
  const double u = rng.uniform01() * partial(m);
  std::size_t lo = 1;
  std::size_t hi = m;
  while (lo < hi) {  // smallest t with u < S(t)
    const std::size_t mid = lo + (hi - lo) / 2;
    if (u < partial(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo - 1;
}

}  // namespace

RspPicks RspSelector::sample(std::size_t i, std::size_t elite_m,
                             RngStream& rng) const {
  const std::size_t n = pop_size_;
  const std::size_t m = std::min(std::max<std::size_t>(elite_m, 1), n);

  RspPicks picks;

  bool placed = false;
  for (int t = 0; t < kResampleCap && !placed; ++t) {
    picks.pbest = sample_elite(m, k_r_pbest_, rng);
    placed = picks.pbest != i;
  }
  if (!placed) {
    picks.pbest = filtered_draw(
        m, [&](std::size_t j) { return rank_weight(j, m, k_r_pbest_); },
        [&](std::size_t j) { return j != i; }, rng);
  }

  placed = false;
  for (int t = 0; t < kResampleCap && !placed; ++t) {
    picks.r1 = pop_main_.sample(rng);
    placed = picks.r1 != i && picks.r1 != picks.pbest;
  }
  if (!placed) {
    picks.r1 = filtered_draw(
        n, [&](std::size_t j) { return rank_weight(j, n, k_r_main_); },
        [&](std::size_t j) { return j != i && j != picks.pbest; }, rng);
  }

  auto r2_ok = [&](const MemberRef& ref) {
    if (ref.is_archive()) return true;
    return ref.index != i && ref.index != picks.pbest && ref.index != picks.r1;
  };
  placed = false;
  for (int t = 0; t < kResampleCap && !placed; ++t) {
    picks.r2 = joint_[joint_main_.sample(rng)];
    placed = r2_ok(picks.r2);
  }
  if (!placed) {
    const std::size_t pos = filtered_draw(
        joint_.size(),
        [&](std::size_t j) { return rank_weight(j, joint_.size(), k_r_main_); },
        [&](std::size_t j) { return r2_ok(joint_[j]); }, rng);
    picks.r2 = joint_[pos];
  }

  return picks;
}

RspPicks sample_distinct_rsp(const Population& pop,
                             const ExternalArchive& archive, std::size_t i,
                             double p, RngStream& rng, double k_r) {
  const std::size_t n = pop.size();
  if (n < 4) {
    throw std::invalid_argument("sample_distinct_rsp: population below 4");
  }
  const auto elite = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(n)));
  const std::size_t m = std::min(std::max<std::size_t>(elite, 2), n);
  const RspSelector selector(pop, archive, k_r, k_r);
  return selector.sample(i, m, rng);
}

}  // namespace rde
