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

#ifndef RDE_EXPERIMENT_HPP_
#define RDE_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rde/baseline.hpp"
#include "rde/optimizer.hpp"
#include "rde/problems.hpp"
#include "rde/stats.hpp"

namespace rde {

/// Flat key/value experiment description with optional per-algorithm
/// sections ([rde], [de_rand1]) whose entries override algorithm defaults.
struct ExperimentConfig {
  std::vector<std::string> problems;
  std::size_t dim = 10;
  std::size_t runs = 25;
  std::uint64_t base_seed = 1;
  std::uint64_t transform_seed = 1;
  bool transform = true;
  double alpha = 0.05;
  std::string algorithm = "rde";  // rde | de_rand1
  std::string transform_import_dir;
  std::string transform_export_dir;
  std::map<std::string, std::string> rde_overrides;
  std::map<std::string, std::string> de_overrides;

  void validate() const;  // throws ConfigError
};

/// Parses the structured-text format: '#' comments, blank lines, 'key = value'
/// pairs, '[section]' headers. Unknown top-level keys raise ConfigError.
ExperimentConfig parse_config(std::istream& is);
ExperimentConfig load_config_file(const std::string& path);

/// The RunConfig an experiment resolves to (dimension defaults plus [rde]
/// section overrides). Seed is filled per run by the batch driver.
RunConfig resolve_run_config(const ExperimentConfig& cfg);
BaselineConfig resolve_baseline_config(const ExperimentConfig& cfg);

/// Instantiates the problem list. Transforms are generated from
/// transform_seed + problem index, or loaded from transform_import_dir when
/// set ("<name>.transform" files); generated transforms are exported to
/// transform_export_dir when set. The composition function manages its own
/// internal shifts and is never wrapped.
std::vector<ObjectiveFunction> build_problems(const ExperimentConfig& cfg);

/// One (problem, run) cell of a batch.
struct RunRecord {
  std::string problem;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double final_error = 0.0;
  std::uint64_t nfes = 0;
  double wall_time = 0.0;  // seconds; informational only
};

/// Executes runs x problems cells, problem-major. Seeds are
/// base_seed + global cell index, so every cell owns a distinct stream.
/// jobs > 1 runs cells on a thread pool; record order stays deterministic.
std::vector<RunRecord> run_batch(const ExperimentConfig& cfg,
                                 std::size_t jobs = 1);

/// Like run_batch, but a failing cell does not discard finished cells: the
/// outcome carries every completed record plus the first failure message.
struct BatchOutcome {
  std::vector<RunRecord> records;
  bool complete = true;
  std::string error;
};

BatchOutcome run_batch_collect(const ExperimentConfig& cfg,
                               std::size_t jobs = 1);

/// CSV schema: problem,run,seed,final_error,nfes,wall_time. Numeric fields
/// are written with round-trip precision; read_results_csv reproduces the
/// records exactly.
void write_results_csv(std::span<const RunRecord> records, std::ostream& os);
std::vector<RunRecord> read_results_csv(std::istream& is);
void write_results_csv_file(std::span<const RunRecord> records,
                            const std::string& path);
std::vector<RunRecord> read_results_csv_file(const std::string& path);

/// CSV schema: problem,mean,sd — one row per problem in first-seen order.
void write_summary_csv(std::span<const RunRecord> records, std::ostream& os);
void write_summary_csv_file(std::span<const RunRecord> records,
                            const std::string& path);

struct CompareRow {
  std::string problem;
  Summary first;
  Summary second;
  Verdict verdict;  // from the first result set's perspective
};

struct Comparison {
  std::vector<CompareRow> rows;
  Wtl wtl;
};

/// Pairs two result sets by problem (lists must match in order and run
/// counts must satisfy the test's minimum) and applies the rank-sum protocol.
Comparison compare_results(std::span<const RunRecord> first,
                           std::span<const RunRecord> second, double alpha);

/// CSV schema: problem,mean_a,sd_a,mean_b,sd_b,verdict.
void write_comparison_csv(const Comparison& comparison, std::ostream& os);
/// Aligned text table with a W/T/L footer.
std::string render_comparison(const Comparison& comparison);

/// CEC-style timing protocol: T0 = reference arithmetic loop, T1 = 200000
/// evaluations of the hybrid stand-in, T2 averaged over 5 full-algorithm
/// runs at the same budget; complexity = (T2_hat - T1)/T0.
struct TimingResult {
  double t0 = 0.0;
  double t1 = 0.0;
  double t2_hat = 0.0;
  double complexity = 0.0;
  std::vector<double> t2_runs;
};

TimingResult run_timing(std::size_t dim);

}  // namespace rde

#endif  // RDE_EXPERIMENT_HPP_
