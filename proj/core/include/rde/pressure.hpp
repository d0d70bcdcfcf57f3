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

#ifndef RDE_PRESSURE_HPP_
#define RDE_PRESSURE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "rde/population.hpp"
#include "rde/rng.hpp"

namespace rde {

/// Rank-based selective-pressure weights: weight of rank i (1-based) over M
/// members is k_r*(M - i) + 1, normalized into a probability vector.
struct RankWeights {
  std::vector<double> weights;
  std::vector<double> probs;
  double k_r = 0.0;
};

/// Throws std::invalid_argument when m == 0.
RankWeights rank_weights(std::size_t m, double k_r);

/// Samples indices proportionally to fixed weights via a cumulative table.
/// sample_prefix restricts the draw to the first m entries (the elite subset)
/// without rebuilding the table. Each call consumes exactly one uniform draw.
class DiscreteSampler {
 public:
  DiscreteSampler() = default;
  explicit DiscreteSampler(std::span<const double> weights);

  std::size_t size() const { return cdf_.size(); }
  std::size_t sample(RngStream& rng) const;
  std::size_t sample_prefix(std::size_t m, RngStream& rng) const;

 private:
  std::vector<double> cdf_;
};

/// Reference into the population or the external archive.
struct MemberRef {
  enum class Source { population, archive };
  Source source = Source::population;
  std::size_t index = 0;

  bool is_archive() const { return source == Source::archive; }
  friend bool operator==(const MemberRef&, const MemberRef&) = default;
};

/// The three donors feeding a mutation: pbest from the elite subset, r1 from
/// the population, r2 from the population∪archive union.
struct RspPicks {
  std::size_t pbest = 0;
  std::size_t r1 = 0;
  MemberRef r2;
};

/// Per-generation sampling state. The population must be sorted ascending by
/// fitness at construction; member index is then the rank. The joint ranking
/// for r2 merges population and archive by fitness, population first on ties.
/// Separate pressure coefficients let the pbest draw run uniform while r1/r2
/// stay weighted (rsp_scope = r1r2).
class RspSelector {
 public:
  RspSelector(const Population& pop, const ExternalArchive& archive,
              double k_r_pbest, double k_r_main);

  /// Draws pbest/r1/r2 mutually distinct and distinct from i. elite_m is the
  /// size of the elite subset (>= 2). Distinctness is enforced by rejection
  /// with a bounded retry count, then by an exact draw over the remaining
  /// candidates.
  RspPicks sample(std::size_t i, std::size_t elite_m, RngStream& rng) const;

  const std::vector<MemberRef>& joint_ranking() const { return joint_; }

 private:
  std::size_t pop_size_;
  double k_r_pbest_;
  double k_r_main_;
  DiscreteSampler pop_main_;    // over population ranks, pressure k_r_main
  DiscreteSampler joint_main_;  // over the joint ranking, pressure k_r_main
  std::vector<MemberRef> joint_;
};

/// One-shot convenience wrapper matching the module contract: builds a
/// selector with uniform pressure k_r on all three draws and samples once.
/// The elite subset is the top max(2, ceil(p*N)) ranked members.
RspPicks sample_distinct_rsp(const Population& pop,
                             const ExternalArchive& archive, std::size_t i,
                             double p, RngStream& rng, double k_r = 3.0);

}  // namespace rde

#endif  // RDE_PRESSURE_HPP_
