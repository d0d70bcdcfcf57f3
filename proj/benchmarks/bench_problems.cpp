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

// Evaluation cost of the benchmark functions, with and without the
// shift+rotation transform. The transform cost is O(D^2) and dominates the
// cheap bases at higher dimensions.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <string>
#include <vector>

#include "rde/problems.hpp"
#include "rde/rng.hpp"

namespace {

std::vector<double> sample_point(const rde::ObjectiveFunction& fn,
                                 rde::RngStream& rng) {
  std::vector<double> x(fn.dim());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = rng.uniform(fn.bounds().lower[j], fn.bounds().upper[j]);
  }
  return x;
}

void BM_Evaluate(benchmark::State& state, const std::string& name,
                 bool transformed) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  rde::RngStream rng(42);
  rde::ObjectiveFunction fn = rde::make_function(name, dim, rng);
  if (transformed) fn = rde::with_random_transform(std::move(fn), rng);
  const std::vector<double> x = sample_point(fn, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fn.evaluate(x));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}

void register_function(const std::string& name) {
  benchmark::RegisterBenchmark(("evaluate/" + name + "/plain").c_str(),
                               BM_Evaluate, name, false)
      ->Arg(10)
      ->Arg(30);
  if (name != "composition") {
    benchmark::RegisterBenchmark(("evaluate/" + name + "/transformed").c_str(),
                                 BM_Evaluate, name, true)
        ->Arg(10)
        ->Arg(30);
  }
}

}  // namespace

int main(int argc, char** argv) {
  for (const std::string& name : rde::function_catalog()) {
    register_function(name);
  }
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
