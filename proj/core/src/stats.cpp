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

#include "rde/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rde {

namespace {

constexpr double kFloor = 1e-8;

}  // namespace

Summary summarize(std::span<const double> errors) {
  if (errors.empty()) throw std::invalid_argument("summarize: empty sample");
  std::vector<double> floored(errors.begin(), errors.end());
  for (double& e : floored) {
    if (e < kFloor) e = 0.0;
  }
  Summary s;
  s.mean = std::accumulate(floored.begin(), floored.end(), 0.0) /
           static_cast<double>(floored.size());
  if (floored.size() > 1) {
    double ss = 0.0;
    for (double e : floored) ss += (e - s.mean) * (e - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(floored.size() - 1));
  }
  return s;
}

const char* verdict_symbol(Verdict v) {
  switch (v) {
    case Verdict::plus:
      return "+";
    case Verdict::minus:
      return "-";
    case Verdict::equal:
      break;
  }
  return "=";
}

Verdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                          double alpha) {
  if (a.size() < 5 || b.size() < 5) {
    throw std::invalid_argument("wilcoxon_rank_sum: need >= 5 samples per side");
  }
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("wilcoxon_rank_sum: alpha must be in (0,1)");
  }

  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  const std::size_t n = n1 + n2;

  struct Entry {
    double value;
    bool from_a;
  };
  std::vector<Entry> pooled;
  pooled.reserve(n);
  for (double v : a) pooled.push_back({v, true});
  for (double v : b) pooled.push_back({v, false});
  std::stable_sort(pooled.begin(), pooled.end(),
                   [](const Entry& x, const Entry& y) {
                     return x.value < y.value;
                   });

  if (pooled.front().value == pooled.back().value) return Verdict::equal;

  // Midranks plus the tie-size terms for the variance correction.
  double rank_sum_a = 0.0;
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && pooled[j].value == pooled[i].value) ++j;
    const double group = static_cast<double>(j - i);
    const double midrank = (static_cast<double>(i + 1) +
                            static_cast<double>(j)) / 2.0;
    for (std::size_t l = i; l < j; ++l) {
      if (pooled[l].from_a) rank_sum_a += midrank;
    }
    tie_term += group * group * group - group;
    i = j;
  }

  const double dn1 = static_cast<double>(n1);
  const double dn2 = static_cast<double>(n2);
  const double dn = static_cast<double>(n);
  const double mu = dn1 * (dn + 1.0) / 2.0;
  const double variance =
      dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
  if (variance <= 0.0) return Verdict::equal;

  const double z =
      std::max(0.0, std::fabs(rank_sum_a - mu) - 0.5) / std::sqrt(variance);
  const double p = std::erfc(z / std::sqrt(2.0));  // two-sided
  if (p >= alpha) return Verdict::equal;

  const double mean_rank_a = rank_sum_a / dn1;
  const double mean_rank_b = (dn * (dn + 1.0) / 2.0 - rank_sum_a) / dn2;
  if (mean_rank_a == mean_rank_b) return Verdict::equal;
  return mean_rank_a < mean_rank_b ? Verdict::plus : Verdict::minus;
}

Wtl wtl_table(std::span<const Verdict> verdicts) {
  Wtl t;
  for (Verdict v : verdicts) {
    switch (v) {
      case Verdict::plus:
        ++t.wins;
        break;
      case Verdict::equal:
        ++t.ties;
        break;
      case Verdict::minus:
        ++t.losses;
        break;
    }
  }
  return t;
}

}  // namespace rde
