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
#include <cstdint>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rde/errors.hpp"
#include "rde/experiment.hpp"
#include "rde/rng.hpp"

namespace {

rde::ExperimentConfig tiny_config() {
  rde::ExperimentConfig cfg;
  cfg.problems = {"sphere", "rastrigin"};
  cfg.dim = 5;
  cfg.runs = 3;
  cfg.base_seed = 100;
  cfg.transform_seed = 7;
  cfg.rde_overrides = {{"max_nfes", "4000"}};
  return cfg;
}

bool same_modulo_wall_time(const std::vector<rde::RunRecord>& a,
                           const std::vector<rde::RunRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].problem != b[i].problem) return false;
    if (a[i].run != b[i].run) return false;
    if (a[i].seed != b[i].seed) return false;
    if (a[i].final_error != b[i].final_error) return false;
    if (a[i].nfes != b[i].nfes) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_config: sections, comments, and lists") {
  std::stringstream ss(R"(# experiment description
problems = sphere, rastrigin , ackley
dim = 10
runs = 7
base_seed = 5
transform = true
alpha = 0.01
algorithm = de_rand1

[rde]
max_nfes = 5000
enable_rsp = false

[de_rand1]
f = 0.6
)");
  const rde::ExperimentConfig cfg = rde::parse_config(ss);
  CHECK(cfg.problems == std::vector<std::string>{"sphere", "rastrigin",
                                                 "ackley"});
  CHECK(cfg.dim == 10);
  CHECK(cfg.runs == 7);
  CHECK(cfg.base_seed == 5);
  CHECK(cfg.alpha == 0.01);
  CHECK(cfg.algorithm == "de_rand1");
  CHECK(cfg.rde_overrides.at("max_nfes") == "5000");
  CHECK(cfg.rde_overrides.at("enable_rsp") == "false");
  CHECK(cfg.de_overrides.at("f") == "0.6");
}

TEST_CASE("parse_config: unknown top-level keys carry a line number") {
  std::stringstream ss("problems = sphere\nnot_a_key = 3\n");
  try {
    rde::parse_config(ss);
    FAIL("expected ConfigError");
  } catch (const rde::ConfigError& e) {
    const std::string what = e.what();
    CHECK(what.find("not_a_key") != std::string::npos);
    CHECK(what.find("2") != std::string::npos);
  }
}

TEST_CASE("parse_config: unknown sections are rejected") {
  std::stringstream ss("problems = sphere\n[pso]\nomega = 1\n");
  CHECK_THROWS_AS(rde::parse_config(ss), rde::ConfigError);
}

TEST_CASE("config validation: catalog membership, duplicates, alpha range") {
  rde::ExperimentConfig cfg = tiny_config();
  CHECK_NOTHROW(cfg.validate());

  rde::ExperimentConfig unknown = cfg;
  unknown.problems = {"sphere", "nonesuch"};
  CHECK_THROWS_AS(unknown.validate(), rde::ConfigError);

  rde::ExperimentConfig dup = cfg;
  dup.problems = {"sphere", "sphere"};
  CHECK_THROWS_AS(dup.validate(), rde::ConfigError);

  rde::ExperimentConfig bad_alpha = cfg;
  bad_alpha.alpha = 1.0;
  CHECK_THROWS_AS(bad_alpha.validate(), rde::ConfigError);

  rde::ExperimentConfig bad_alg = cfg;
  bad_alg.algorithm = "cmaes";
  CHECK_THROWS_AS(bad_alg.validate(), rde::ConfigError);

  rde::ExperimentConfig no_problems = cfg;
  no_problems.problems.clear();
  CHECK_THROWS_AS(no_problems.validate(), rde::ConfigError);
}

TEST_CASE("resolve_run_config: dimension defaults plus section overrides") {
  rde::ExperimentConfig cfg = tiny_config();
  cfg.dim = 10;
  cfg.rde_overrides = {{"max_nfes", "50000"}, {"p_r", "0.1"}};
  const rde::RunConfig rc = rde::resolve_run_config(cfg);
  CHECK(rc.dim == 10);
  CHECK(rc.max_nfes == 50000);
  CHECK(rc.n_max == 180);
  CHECK(rc.p_r == 0.1);
}

TEST_CASE("resolve_baseline_config: accepts only the baseline's knobs") {
  rde::ExperimentConfig cfg = tiny_config();
  cfg.algorithm = "de_rand1";
  cfg.de_overrides = {{"f", "0.7"}, {"cr", "0.8"}, {"n", "30"},
                      {"max_nfes", "9000"}};
  const rde::BaselineConfig bc = rde::resolve_baseline_config(cfg);
  CHECK(bc.f == 0.7);
  CHECK(bc.cr == 0.8);
  CHECK(bc.n == 30);
  CHECK(bc.max_nfes == 9000);

  cfg.de_overrides = {{"p_r", "0.2"}};  // an RDE-only knob
  CHECK_THROWS_AS(rde::resolve_baseline_config(cfg), rde::ConfigError);
}

TEST_CASE("build_problems: transformed instances are seeded per problem") {
  rde::ExperimentConfig cfg = tiny_config();
  const auto problems = rde::build_problems(cfg);
  REQUIRE(problems.size() == 2);
  CHECK(problems[0].name() == "sphere");
  CHECK(problems[1].name() == "rastrigin");
  CHECK(problems[0].has_transform());
  CHECK(problems[1].has_transform());
  CHECK(problems[0].transform().shift != problems[1].transform().shift);

  // Same transform_seed, same instances.
  const auto again = rde::build_problems(cfg);
  CHECK(problems[0].transform().shift == again[0].transform().shift);
  CHECK(problems[1].transform().shift == again[1].transform().shift);

  rde::ExperimentConfig bare = cfg;
  bare.transform = false;
  const auto plain = rde::build_problems(bare);
  CHECK(!plain[0].has_transform());
  const std::vector<double> origin(cfg.dim, 0.0);
  CHECK(plain[0].evaluate(origin) == 0.0);
}

TEST_CASE("build_problems: transform export then import reproduces the "
          "instances") {
  namespace fs = std::filesystem;
  // Deliberately not pre-created: export is expected to make the directory.
  const fs::path dir = fs::temp_directory_path() / "rde_test_transforms";
  fs::remove_all(dir);

  rde::ExperimentConfig cfg = tiny_config();
  cfg.transform_export_dir = dir.string();
  const auto exported = rde::build_problems(cfg);
  CHECK(fs::exists(dir / "sphere.transform"));
  CHECK(fs::exists(dir / "rastrigin.transform"));

  rde::ExperimentConfig importer = tiny_config();
  importer.transform_seed = 999;  // would generate different transforms
  importer.transform_import_dir = dir.string();
  const auto imported = rde::build_problems(importer);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(imported[i].transform().shift == exported[i].transform().shift);
    CHECK(imported[i].transform().rotation.data() ==
          exported[i].transform().rotation.data());
  }
  fs::remove_all(dir);
}

TEST_CASE("run_batch: problem-major layout with arithmetic seeds") {
  const rde::ExperimentConfig cfg = tiny_config();
  const std::vector<rde::RunRecord> records = rde::run_batch(cfg, 2);
  REQUIRE(records.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(records[i].problem == (i < 3 ? "sphere" : "rastrigin"));
    CHECK(records[i].run == i % 3);
    CHECK(records[i].seed == 100 + i);
    CHECK(records[i].nfes == 4000);
    CHECK(records[i].final_error >= 0.0);
    CHECK(records[i].wall_time > 0.0);
  }
}

TEST_CASE("run_batch: deterministic across repeats and thread counts") {
  const rde::ExperimentConfig cfg = tiny_config();
  const auto serial = rde::run_batch(cfg, 1);
  const auto threaded = rde::run_batch(cfg, 4);
  const auto repeat = rde::run_batch(cfg, 4);
  CHECK(same_modulo_wall_time(serial, threaded));
  CHECK(same_modulo_wall_time(threaded, repeat));
}

TEST_CASE("run_batch: baseline algorithm flows through the same pipeline") {
  rde::ExperimentConfig cfg = tiny_config();
  cfg.algorithm = "de_rand1";
  cfg.de_overrides = {{"max_nfes", "4000"}};
  const auto records = rde::run_batch(cfg, 2);
  REQUIRE(records.size() == 6);
  for (const auto& r : records) CHECK(r.nfes == 4000);
}

TEST_CASE("run_batch_collect: invalid overrides fail before any run starts") {
  rde::ExperimentConfig cfg = tiny_config();
  cfg.rde_overrides = {{"max_nfes", "10"}};  // below the initial population
  CHECK_THROWS_AS(rde::run_batch_collect(cfg, 2), rde::ConfigError);
}

TEST_CASE("results csv: header, field count, and exact round-trip") {
  const rde::ExperimentConfig cfg = tiny_config();
  const auto records = rde::run_batch(cfg, 2);

  std::stringstream ss;
  rde::write_results_csv(records, ss);
  std::string header;
  std::getline(ss, header);
  CHECK(header == "problem,run,seed,final_error,nfes,wall_time");

  std::stringstream again(ss.str());
  const auto back = rde::read_results_csv(again);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(back[i].problem == records[i].problem);
    CHECK(back[i].run == records[i].run);
    CHECK(back[i].seed == records[i].seed);
    CHECK(back[i].final_error == records[i].final_error);  // bit-exact
    CHECK(back[i].nfes == records[i].nfes);
    CHECK(back[i].wall_time == records[i].wall_time);
  }
}

TEST_CASE("results csv: malformed input is rejected") {
  std::stringstream bad_header("foo,bar\n");
  CHECK_THROWS_AS(rde::read_results_csv(bad_header), rde::ConfigError);

  std::stringstream short_row(
      "problem,run,seed,final_error,nfes,wall_time\nsphere,0,1\n");
  CHECK_THROWS_AS(rde::read_results_csv(short_row), rde::ConfigError);

  std::stringstream bad_number(
      "problem,run,seed,final_error,nfes,wall_time\nsphere,0,1,x,100,0.5\n");
  CHECK_THROWS_AS(rde::read_results_csv(bad_number), rde::ConfigError);
}

TEST_CASE("summary csv: one row per problem in first-seen order") {
  const rde::ExperimentConfig cfg = tiny_config();
  const auto records = rde::run_batch(cfg, 2);
  std::stringstream ss;
  rde::write_summary_csv(records, ss);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "problem,mean,sd");
  std::getline(ss, line);
  CHECK(line.rfind("sphere,", 0) == 0);
  std::getline(ss, line);
  CHECK(line.rfind("rastrigin,", 0) == 0);
  CHECK(!std::getline(ss, line));
}

TEST_CASE("compare_results: a result set against itself is all ties") {
  rde::ExperimentConfig cfg = tiny_config();
  cfg.runs = 5;  // rank-sum minimum
  const auto records = rde::run_batch(cfg, 4);
  const rde::Comparison cmp = rde::compare_results(records, records, 0.05);
  REQUIRE(cmp.rows.size() == 2);
  for (const auto& row : cmp.rows) {
    CHECK(row.verdict == rde::Verdict::equal);
  }
  CHECK(cmp.wtl.wins == 0);
  CHECK(cmp.wtl.ties == 2);
  CHECK(cmp.wtl.losses == 0);
}

TEST_CASE("compare_results: problem lists must line up") {
  rde::ExperimentConfig cfg = tiny_config();
  cfg.runs = 5;
  const auto records = rde::run_batch(cfg, 4);

  rde::ExperimentConfig other = cfg;
  other.problems = {"sphere"};
  const auto partial = rde::run_batch(other, 4);
  CHECK_THROWS_AS(rde::compare_results(records, partial, 0.05),
                  rde::ConfigError);
}

TEST_CASE("compare_results: tighter alpha never flips toward significance") {
  // Build two synthetic record sets with a moderate separation.
  auto make_records = [](double base) {
    std::vector<rde::RunRecord> rs;
    for (std::size_t i = 0; i < 10; ++i) {
      rde::RunRecord r;
      r.problem = "sphere";
      r.run = i;
      r.seed = i;
      r.final_error = base + 0.1 * static_cast<double>(i);
      r.nfes = 1;
      rs.push_back(r);
    }
    return rs;
  };
  const auto lo = make_records(0.0);
  const auto hi = make_records(0.35);
  const rde::Verdict loose = rde::compare_results(lo, hi, 0.05).rows[0].verdict;
  const rde::Verdict tight =
      rde::compare_results(lo, hi, 1e-9).rows[0].verdict;
  CHECK(tight == rde::Verdict::equal);
  if (loose == rde::Verdict::equal) CHECK(tight == rde::Verdict::equal);
}

TEST_CASE("render_comparison: aligned table with a W/T/L footer") {
  rde::ExperimentConfig cfg = tiny_config();
  cfg.runs = 5;
  const auto records = rde::run_batch(cfg, 4);
  const rde::Comparison cmp = rde::compare_results(records, records, 0.05);
  const std::string text = rde::render_comparison(cmp);
  CHECK(text.find("sphere") != std::string::npos);
  CHECK(text.find("rastrigin") != std::string::npos);
  CHECK(text.find("W/T/L: 0/2/0") != std::string::npos);
}

TEST_CASE("comparison csv: schema and verdict glyphs") {
  rde::ExperimentConfig cfg = tiny_config();
  cfg.runs = 5;
  const auto records = rde::run_batch(cfg, 4);
  const rde::Comparison cmp = rde::compare_results(records, records, 0.05);
  std::stringstream ss;
  rde::write_comparison_csv(cmp, ss);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "problem,mean_a,sd_a,mean_b,sd_b,verdict");
  std::getline(ss, line);
  CHECK(line.rfind("sphere,", 0) == 0);
  CHECK(line.back() == '=');
}

TEST_CASE("run_timing: T2_hat is the mean of five timed runs") {
  const rde::TimingResult t = rde::run_timing(5);
  CHECK(t.t0 > 0.0);
  CHECK(t.t1 > 0.0);
  REQUIRE(t.t2_runs.size() == 5);
  double sum = 0.0;
  for (double v : t.t2_runs) {
    CHECK(v > 0.0);
    sum += v;
  }
  CHECK(t.t2_hat == doctest::Approx(sum / 5.0).epsilon(1e-12));
  CHECK(std::isfinite(t.complexity));
}
