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

#ifndef RDE_RNG_HPP
#define RDE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace rde {

/// Deterministic random stream used by every stochastic operation.
///
/// All distributions are derived from uniform draws of a mt19937_64, whose
/// output sequence is fully specified by the standard. Identical seed plus
/// identical call sequence therefore replays bit-exactly, which is what makes
/// whole optimization runs reproducible.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n) {
    auto idx = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return idx < n ? idx : n - 1;
  }

  /// Normal(mean, sigma) via Box-Muller. Consumes exactly two uniforms.
  double normal(double mean, double sigma);

  /// Cauchy(location, scale) via inverse transform. Consumes one uniform.
  double cauchy(double location, double scale);

  /// In-place Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace rde

#endif  // RDE_RNG_HPP
