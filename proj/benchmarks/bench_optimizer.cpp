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

// End-to-end optimizer throughput plus the hot per-generation pieces
// (selector construction and donor sampling).

#include <benchmark/benchmark.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rde/optimizer.hpp"
#include "rde/population.hpp"
#include "rde/pressure.hpp"
#include "rde/problems.hpp"
#include "rde/rng.hpp"

namespace {

rde::ObjectiveFunction transformed(const char* name, std::size_t dim) {
  rde::RngStream rng(7);
  return rde::with_random_transform(rde::make_function(name, dim, rng), rng);
}

void BM_FullRun(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto problem = transformed("rastrigin", dim);
  rde::RunConfig config = rde::RunConfig::for_dimension(dim);
  config.max_nfes = 20000;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(rde::run(problem, config));
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations()) * 20000);
}
BENCHMARK(BM_FullRun)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SelectorBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto problem = transformed("sphere", 10);
  rde::RngStream rng(11);
  rde::Population pop = rde::init_population(problem, n, rng);
  rde::ExternalArchive archive(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    archive.insert(pop.members[i], rng);
  }
  for (auto _ : state) {
    const rde::RspSelector selector(pop, archive, 3.0, 3.0);
    benchmark::DoNotOptimize(&selector);
  }
}
BENCHMARK(BM_SelectorBuild)->Arg(18)->Arg(180)->Arg(540);

void BM_DonorSampling(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto problem = transformed("sphere", 10);
  rde::RngStream rng(13);
  rde::Population pop = rde::init_population(problem, n, rng);
  rde::ExternalArchive archive(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    archive.insert(pop.members[i], rng);
  }
  const rde::RspSelector selector(pop, archive, 3.0, 3.0);
  const std::size_t elite = std::max<std::size_t>(2, n / 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(selector.sample(i, elite, rng));
    i = (i + 1) % n;
  }
}
BENCHMARK(BM_DonorSampling)->Arg(18)->Arg(180)->Arg(540);

}  // namespace

BENCHMARK_MAIN();
