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

#ifndef RDE_STATS_HPP_
#define RDE_STATS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rde {

struct Summary {
  double mean = 0.0;
  double sd = 0.0;
};

/// Mean and sample standard deviation (n-1 denominator; 0 for n == 1) after
/// flooring entries below 1e-8 to exactly 0. Throws std::invalid_argument on
/// an empty sample.
Summary summarize(std::span<const double> errors);

/// Two-sided comparison outcome from the first sample's perspective:
/// plus = first sample significantly lower (superior for errors).
enum class Verdict { plus, equal, minus };

const char* verdict_symbol(Verdict v);

/// Two-sided Wilcoxon rank-sum test, normal approximation with midranks,
/// tie-corrected variance, and continuity correction. Significant outcomes
/// are signed by mean rank (lower = superior); identical pooled samples or a
/// degenerate variance yield "=". Requires at least 5 samples per side.
Verdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                          double alpha);

struct Wtl {
  std::size_t wins = 0;
  std::size_t ties = 0;
  std::size_t losses = 0;
};

/// Counts +/=/- from the reference algorithm's perspective.
Wtl wtl_table(std::span<const Verdict> verdicts);

}  // namespace rde

#endif  // RDE_STATS_HPP_
