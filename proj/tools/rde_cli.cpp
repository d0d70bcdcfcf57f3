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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rde/errors.hpp"
#include "rde/experiment.hpp"

namespace {

// --out flag, then RDE_OUT_DIR, then the working directory.
std::string resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("RDE_OUT_DIR"); env && *env) return env;
  return ".";
}

std::map<std::string, std::string> parse_set_flags(
    const std::vector<std::string>& sets) {
  std::map<std::string, std::string> overrides;
  for (const std::string& entry : sets) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw rde::ConfigError("--set expects key=value, got '" + entry + "'");
    }
    overrides[entry.substr(0, eq)] = entry.substr(eq + 1);
  }
  return overrides;
}

std::string output_path(const std::string& dir, const std::string& label,
                        const std::string& stem) {
  std::filesystem::create_directories(dir);
  const std::string name = label.empty() ? stem : label + "_" + stem;
  return (std::filesystem::path(dir) / (name + ".csv")).string();
}

// Shared by `run` and `ablate`; returns the process exit code.
int run_experiment(const std::string& config_path, std::size_t dim_override,
                   const std::vector<std::string>& sets,
                   const std::string& out_flag, const std::string& label,
                   std::size_t jobs, const std::string& import_dir,
                   const std::string& export_dir, bool force_rde) {
  rde::ExperimentConfig cfg = rde::load_config_file(config_path);
  if (dim_override != 0) cfg.dim = dim_override;
  if (force_rde) cfg.algorithm = "rde";
  if (!import_dir.empty()) cfg.transform_import_dir = import_dir;
  if (!export_dir.empty()) cfg.transform_export_dir = export_dir;

  auto& section_overrides =
      cfg.algorithm == "rde" ? cfg.rde_overrides : cfg.de_overrides;
  for (const auto& [key, value] : parse_set_flags(sets)) {
    section_overrides[key] = value;
  }
  // Fail on bad overrides before any run starts.
  if (cfg.algorithm == "rde") {
    (void)rde::resolve_run_config(cfg);
  } else {
    (void)rde::resolve_baseline_config(cfg);
  }

  const std::string out_dir = resolve_out_dir(out_flag);
  const rde::BatchOutcome outcome = rde::run_batch_collect(cfg, jobs);

  const std::string results_path = output_path(out_dir, label, "results");
  rde::write_results_csv_file(outcome.records, results_path);
  std::cout << "wrote " << results_path << " (" << outcome.records.size()
            << " rows)\n";
  if (!outcome.records.empty()) {
    const std::string summary_path = output_path(out_dir, label, "summary");
    rde::write_summary_csv_file(outcome.records, summary_path);
    std::cout << "wrote " << summary_path << '\n';
  }
  if (!outcome.complete) {
    std::cerr << "batch failed after " << outcome.records.size()
              << " runs: " << outcome.error << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RDE experiment harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  std::string label;
  std::string import_dir;
  std::string export_dir;
  std::vector<std::string> sets;
  std::size_t dim_override = 0;
  std::size_t jobs = 1;

  CLI::App* cmd_run = app.add_subcommand(
      "run", "Run a batch of optimizations from a config file");
  cmd_run->add_option("--config", config_path, "Experiment config file")
      ->required();
  cmd_run->add_option("--dim", dim_override,
                      "Override the problem dimension (budget rederived)");
  cmd_run->add_option("--set", sets,
                      "Override an algorithm parameter (key=value)");
  cmd_run->add_option("--out", out_flag,
                      "Output directory (default: $RDE_OUT_DIR or .)");
  cmd_run->add_option("--label", label, "Prefix for output file names");
  cmd_run->add_option("--jobs", jobs, "Parallel runs (default 1)");
  cmd_run->add_option("--import-transforms", import_dir,
                      "Load per-problem transforms from this directory");
  cmd_run->add_option("--export-transforms", export_dir,
                      "Write generated transforms to this directory");

  CLI::App* cmd_ablate = app.add_subcommand(
      "ablate", "Run the RDE algorithm with strategy flags overridden");
  cmd_ablate->add_option("--config", config_path, "Experiment config file")
      ->required();
  cmd_ablate->add_option("--set", sets, "Flag override (key=value)");
  cmd_ablate->add_option("--out", out_flag, "Output directory");
  cmd_ablate->add_option("--label", label,
                         "Prefix for output file names (default: ablation)");
  cmd_ablate->add_option("--jobs", jobs, "Parallel runs (default 1)");

  std::string compare_a;
  std::string compare_b;
  double alpha = 0.05;
  CLI::App* cmd_compare = app.add_subcommand(
      "compare", "Rank-sum comparison of two result CSVs");
  cmd_compare->add_option("--a", compare_a, "First results CSV")->required();
  cmd_compare->add_option("--b", compare_b, "Second results CSV")->required();
  cmd_compare->add_option("--alpha", alpha, "Significance level (default 0.05)");
  cmd_compare->add_option("--out", out_flag, "Output directory");
  cmd_compare->add_option("--label", label, "Prefix for output file names");

  std::size_t timing_dim = 30;
  CLI::App* cmd_timing =
      app.add_subcommand("timing", "CEC-style algorithm complexity timing");
  cmd_timing->add_option("--dim", timing_dim, "Problem dimension (default 30)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      return run_experiment(config_path, dim_override, sets, out_flag, label,
                            jobs, import_dir, export_dir, false);
    }
    if (cmd_ablate->parsed()) {
      return run_experiment(config_path, 0, sets, out_flag,
                            label.empty() ? "ablation" : label, jobs, "", "",
                            true);
    }
    if (cmd_compare->parsed()) {
      const auto a = rde::read_results_csv_file(compare_a);
      const auto b = rde::read_results_csv_file(compare_b);
      const rde::Comparison cmp = rde::compare_results(a, b, alpha);
      std::cout << rde::render_comparison(cmp);
      const std::string path =
          output_path(resolve_out_dir(out_flag), label, "comparison");
      std::ofstream os(path);
      rde::write_comparison_csv(cmp, os);
      std::cout << "wrote " << path << '\n';
      return 0;
    }
    if (cmd_timing->parsed()) {
      const rde::TimingResult t = rde::run_timing(timing_dim);
      std::printf("T0        %.6f s\n", t.t0);
      std::printf("T1        %.6f s\n", t.t1);
      for (std::size_t r = 0; r < t.t2_runs.size(); ++r) {
        std::printf("T2 run %zu  %.6f s\n", r + 1, t.t2_runs[r]);
      }
      std::printf("T2_hat    %.6f s\n", t.t2_hat);
      std::printf("(T2_hat - T1)/T0 = %.4f\n", t.complexity);
      return 0;
    }
  } catch (const rde::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
