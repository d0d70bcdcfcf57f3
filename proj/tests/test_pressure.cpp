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

#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rde/population.hpp"
#include "rde/pressure.hpp"
#include "rde/rng.hpp"

namespace {

rde::Population make_pop(const std::vector<double>& fitness) {
  rde::Population pop;
  for (double f : fitness) {
    rde::Candidate c;
    c.x = {f};
    c.fitness = f;
    pop.members.push_back(c);
  }
  return pop;
}

rde::ExternalArchive make_archive(const std::vector<double>& fitness,
                                  std::size_t capacity) {
  rde::ExternalArchive archive(capacity);
  rde::RngStream rng(99);
  for (double f : fitness) {
    rde::Candidate c;
    c.x = {f};
    c.fitness = f;
    archive.insert(c, rng);
  }
  return archive;
}

}  // namespace

TEST_CASE("rank_weights: M=4, k_r=3 reproduces the arithmetic ladder") {
  const rde::RankWeights rw = rde::rank_weights(4, 3.0);
  REQUIRE(rw.weights.size() == 4);
  CHECK(rw.weights[0] == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(rw.weights[1] == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(rw.weights[2] == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(rw.weights[3] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rw.probs[0] == doctest::Approx(10.0 / 22.0).epsilon(1e-15));
  CHECK(rw.probs[1] == doctest::Approx(7.0 / 22.0).epsilon(1e-15));
  CHECK(rw.probs[2] == doctest::Approx(4.0 / 22.0).epsilon(1e-15));
  CHECK(rw.probs[3] == doctest::Approx(1.0 / 22.0).epsilon(1e-15));
}

TEST_CASE("rank_weights: k_r=0 collapses to the uniform distribution") {
  const rde::RankWeights rw = rde::rank_weights(3, 0.0);
  for (double p : rw.probs) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("rank_weights: single member gets probability one") {
  const rde::RankWeights rw = rde::rank_weights(1, 3.0);
  REQUIRE(rw.probs.size() == 1);
  CHECK(rw.probs[0] == 1.0);
}

TEST_CASE("rank_weights: probabilities sum to one and decrease with rank") {
  for (std::size_t m : {2u, 5u, 18u, 91u}) {
    for (double kr : {0.5, 1.0, 3.0, 7.0}) {
      const rde::RankWeights rw = rde::rank_weights(m, kr);
      double sum = 0.0;
      for (double p : rw.probs) sum += p;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t i = 1; i < m; ++i) CHECK(rw.probs[i - 1] > rw.probs[i]);
    }
  }
}

TEST_CASE("rank_weights: rejects empty subsets and negative pressure") {
  CHECK_THROWS_AS(rde::rank_weights(0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(rde::rank_weights(4, -1.0), std::invalid_argument);
}

TEST_CASE("discrete sampler: empirical frequencies track Eq. 10 within 3 "
          "sigma") {
  const std::size_t n = 10;
  const rde::RankWeights rw = rde::rank_weights(n, 3.0);
  rde::DiscreteSampler sampler(rw.weights);
  rde::RngStream rng(20240515);
  const int draws = 100000;
  std::vector<int> counts(n, 0);
  for (int t = 0; t < draws; ++t) ++counts[sampler.sample_prefix(n, rng)];
  for (std::size_t i = 0; i < n; ++i) {
    const double expected = draws * rw.probs[i];
    const double sigma = std::sqrt(draws * rw.probs[i] * (1.0 - rw.probs[i]));
    CHECK(std::fabs(counts[i] - expected) <= 3.0 * sigma);
  }
}

TEST_CASE("discrete sampler: prefix draws restrict to the leading ranks") {
  const rde::RankWeights rw = rde::rank_weights(10, 3.0);
  rde::DiscreteSampler sampler(rw.weights);
  rde::RngStream rng(77);
  for (int t = 0; t < 10000; ++t) {
    CHECK(sampler.sample_prefix(4, rng) < 4);
  }
}

TEST_CASE("joint ranking: population wins fitness ties against the archive") {
  rde::Population pop = make_pop({1.0, 3.0, 5.0});
  rde::ExternalArchive archive = make_archive({3.0, 4.0}, 10);
  rde::RspSelector selector(pop, archive, 3.0, 3.0);
  const auto& joint = selector.joint_ranking();
  REQUIRE(joint.size() == 5);
  CHECK(joint[0] == rde::MemberRef{rde::MemberRef::Source::population, 0});
  CHECK(joint[1] == rde::MemberRef{rde::MemberRef::Source::population, 1});
  CHECK(joint[2] == rde::MemberRef{rde::MemberRef::Source::archive, 0});
  CHECK(joint[3] == rde::MemberRef{rde::MemberRef::Source::archive, 1});
  CHECK(joint[4] == rde::MemberRef{rde::MemberRef::Source::population, 2});
}

TEST_CASE("sample_distinct_rsp: picks are mutually distinct and exclude i") {
  rde::Population pop = make_pop({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0});
  rde::ExternalArchive archive = make_archive({2.5, 6.5, 9.0}, 8);
  rde::RngStream rng(31);
  for (int t = 0; t < 20000; ++t) {
    const std::size_t i = rng.uniform_index(pop.size());
    const rde::RspPicks picks = rde::sample_distinct_rsp(pop, archive, i, 0.25, rng);
    CHECK(picks.pbest != i);
    CHECK(picks.r1 != i);
    CHECK(picks.r1 != picks.pbest);
    CHECK(picks.r1 < pop.size());
    if (picks.r2.source == rde::MemberRef::Source::population) {
      CHECK(picks.r2.index != i);
      CHECK(picks.r2.index != picks.pbest);
      CHECK(picks.r2.index != picks.r1);
    } else {
      CHECK(picks.r2.index < archive.size());
    }
  }
}

TEST_CASE("sample_distinct_rsp: feasible at the minimum population size") {
  rde::Population pop = make_pop({1.0, 2.0, 3.0, 4.0});
  rde::ExternalArchive archive(4);  // empty
  rde::RngStream rng(12);
  for (std::size_t i = 0; i < 4; ++i) {
    for (int t = 0; t < 2000; ++t) {
      const rde::RspPicks picks =
          rde::sample_distinct_rsp(pop, archive, i, 1.0, rng);
      CHECK(picks.pbest != i);
      CHECK(picks.r1 != i);
      CHECK(picks.r1 != picks.pbest);
      REQUIRE(picks.r2.source == rde::MemberRef::Source::population);
      const std::set<std::size_t> chosen{i, picks.pbest, picks.r1,
                                         picks.r2.index};
      CHECK(chosen.size() == 4);  // all four roles distinct
    }
  }
}

TEST_CASE("sample_distinct_rsp: p=1 with k_r=0 and empty archive is a "
          "uniform distinct triple") {
  rde::Population pop = make_pop({1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  rde::ExternalArchive archive(6);
  rde::RngStream rng(44);
  std::vector<int> pbest_counts(6, 0);
  const int draws = 60000;
  for (int t = 0; t < draws; ++t) {
    const rde::RspPicks picks =
        rde::sample_distinct_rsp(pop, archive, 0, 1.0, rng, 0.0);
    CHECK(picks.pbest != 0);
    ++pbest_counts[picks.pbest];
  }
  CHECK(pbest_counts[0] == 0);
  // Uniform over the 5 admissible members: mean 12000, sigma ~ 98.
  for (std::size_t j = 1; j < 6; ++j) {
    CHECK(std::fabs(pbest_counts[j] - 12000.0) <= 3.0 * 98.0);
  }
}

TEST_CASE("sample_distinct_rsp: elite subset cap keeps pbest in the top "
          "ceil(p*N)") {
  rde::Population pop =
      make_pop({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0});
  rde::ExternalArchive archive(10);
  rde::RngStream rng(55);
  for (int t = 0; t < 20000; ++t) {
    const rde::RspPicks picks =
        rde::sample_distinct_rsp(pop, archive, 9, 0.25, rng);
    CHECK(picks.pbest < 3);  // ceil(0.25 * 10) = 3
  }
}

TEST_CASE("sample_distinct_rsp: elite floor of two applies for tiny p") {
  rde::Population pop = make_pop({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0,
                                  10.0});
  rde::ExternalArchive archive(10);
  rde::RngStream rng(56);
  bool saw_second = false;
  for (int t = 0; t < 5000; ++t) {
    const rde::RspPicks picks =
        rde::sample_distinct_rsp(pop, archive, 9, 1e-9, rng);
    CHECK(picks.pbest < 2);
    if (picks.pbest == 1) saw_second = true;
  }
  CHECK(saw_second);
}

TEST_CASE("sample_distinct_rsp: elite rank weights are re-derived at the "
          "subset size") {
  // N=10, m=2: Eq. 9 at M=2 gives weights (4,1) -> P(rank 1) = 0.8. If the
  // full-population weights were renormalized instead, P would be 28/53.
  rde::Population pop = make_pop({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0,
                                  10.0});
  rde::ExternalArchive archive(10);
  rde::RngStream rng(57);
  const int draws = 100000;
  int rank0 = 0;
  for (int t = 0; t < draws; ++t) {
    const rde::RspPicks picks =
        rde::sample_distinct_rsp(pop, archive, 9, 0.2, rng);
    REQUIRE(picks.pbest < 2);
    if (picks.pbest == 0) ++rank0;
  }
  const double frequency = static_cast<double>(rank0) / draws;
  CHECK(std::fabs(frequency - 0.8) < 0.006);   // 3 sigma ~ 0.0038
  CHECK(std::fabs(frequency - 28.0 / 53.0) > 0.05);
}

TEST_CASE("sample_distinct_rsp: archive members are reachable as r2") {
  rde::Population pop = make_pop({1.0, 2.0, 3.0, 4.0, 5.0});
  rde::ExternalArchive archive = make_archive({0.5, 2.5}, 5);
  rde::RngStream rng(58);
  int archive_hits = 0;
  for (int t = 0; t < 5000; ++t) {
    const rde::RspPicks picks = rde::sample_distinct_rsp(pop, archive, 2, 0.5, rng);
    if (picks.r2.source == rde::MemberRef::Source::archive) ++archive_hits;
  }
  CHECK(archive_hits > 500);
}

TEST_CASE("sample_distinct_rsp: rejects populations below four members") {
  rde::Population pop = make_pop({1.0, 2.0, 3.0});
  rde::ExternalArchive archive(3);
  rde::RngStream rng(59);
  CHECK_THROWS_AS(rde::sample_distinct_rsp(pop, archive, 0, 0.5, rng),
                  std::invalid_argument);
}
