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

#include "rde/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string_view>
#include <thread>
#include <unordered_set>

#include "rde/errors.hpp"

namespace rde {

namespace {

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, ptr};
}

double parse_double(const std::string& field, const std::string& what) {
  double v = 0.0;
  const auto* begin = field.data();
  const auto* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(what + ": cannot parse real '" + field + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& field, const std::string& what) {
  std::uint64_t v = 0;
  const auto* begin = field.data();
  const auto* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(what + ": cannot parse integer '" + field + "'");
  }
  return v;
}

bool parse_flag(const std::string& field, const std::string& what) {
  if (field == "true" || field == "1") return true;
  if (field == "false" || field == "0") return false;
  throw ConfigError(what + ": expected true/false, got '" + field + "'");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& msg) {
    throw ConfigError("experiment config: " + msg);
  };
  if (problems.empty()) fail("problem list is empty");
  std::unordered_set<std::string> seen;
  const auto& catalog = function_catalog();
  for (const auto& name : problems) {
    if (std::find(catalog.begin(), catalog.end(), name) == catalog.end()) {
      fail("unknown problem '" + name + "'");
    }
    if (!seen.insert(name).second) fail("duplicate problem '" + name + "'");
  }
  if (dim == 0) fail("dim must be positive");
  if (runs == 0) fail("runs must be positive");
  if (!(alpha > 0.0) || !(alpha < 1.0)) fail("alpha must be in (0,1)");
  if (algorithm != "rde" && algorithm != "de_rand1") {
    fail("algorithm must be rde or de_rand1");
  }
}

ExperimentConfig parse_config(std::istream& is) {
  ExperimentConfig cfg;
  std::string section;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') {
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": unterminated section header");
      }
      section = trim(text.substr(1, text.size() - 2));
      if (section != "rde" && section != "de_rand1") {
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": empty key");
    }

    if (section == "rde") {
      cfg.rde_overrides[key] = value;
      continue;
    }
    if (section == "de_rand1") {
      cfg.de_overrides[key] = value;
      continue;
    }

    if (key == "problems") {
      cfg.problems.clear();
      for (const auto& entry : split(value, ',')) {
        const std::string name = trim(entry);
        if (!name.empty()) cfg.problems.push_back(name);
      }
    } else if (key == "dim") {
      cfg.dim = static_cast<std::size_t>(parse_u64(value, key));
    } else if (key == "runs") {
      cfg.runs = static_cast<std::size_t>(parse_u64(value, key));
    } else if (key == "base_seed") {
      cfg.base_seed = parse_u64(value, key);
    } else if (key == "transform_seed") {
      cfg.transform_seed = parse_u64(value, key);
    } else if (key == "transform") {
      cfg.transform = parse_flag(value, key);
    } else if (key == "alpha") {
      cfg.alpha = parse_double(value, key);
    } else if (key == "algorithm") {
      cfg.algorithm = value;
    } else if (key == "transform_import_dir") {
      cfg.transform_import_dir = value;
    } else if (key == "transform_export_dir") {
      cfg.transform_export_dir = value;
    } else {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  return parse_config(is);
}

RunConfig resolve_run_config(const ExperimentConfig& cfg) {
  const RunConfig base = RunConfig::for_dimension(cfg.dim);
  RunConfig resolved = apply_overrides(base, cfg.rde_overrides);
  resolved.validate();
  return resolved;
}

BaselineConfig resolve_baseline_config(const ExperimentConfig& cfg) {
  BaselineConfig base = BaselineConfig::for_dimension(cfg.dim);
  for (const auto& [key, value] : cfg.de_overrides) {
    if (key == "f") {
      base.f = parse_double(value, "de_rand1 " + key);
    } else if (key == "cr") {
      base.cr = parse_double(value, "de_rand1 " + key);
    } else if (key == "n") {
      base.n = static_cast<std::size_t>(parse_u64(value, "de_rand1 " + key));
    } else if (key == "max_nfes") {
      base.max_nfes = parse_u64(value, "de_rand1 " + key);
    } else {
      throw ConfigError("unknown de_rand1 override: " + key);
    }
  }
  base.validate();
  return base;
}

std::vector<ObjectiveFunction> build_problems(const ExperimentConfig& cfg) {
  cfg.validate();
  if (!cfg.transform_export_dir.empty()) {
    // Best effort; save_transform_file reports the real error if this fails.
    std::error_code ec;
    std::filesystem::create_directories(cfg.transform_export_dir, ec);
  }
  std::vector<ObjectiveFunction> problems;
  problems.reserve(cfg.problems.size());
  for (std::size_t i = 0; i < cfg.problems.size(); ++i) {
    const std::string& name = cfg.problems[i];
    RngStream rng(cfg.transform_seed + i);
    ObjectiveFunction fn = make_function(name, cfg.dim, rng);
    if (cfg.transform && name != "composition") {
      if (!cfg.transform_import_dir.empty()) {
        fn.set_transform(load_transform_file(cfg.transform_import_dir + "/" +
                                             name + ".transform"));
      } else {
        fn = with_random_transform(std::move(fn), rng);
      }
      if (!cfg.transform_export_dir.empty()) {
        save_transform_file(fn.transform(), cfg.transform_export_dir + "/" +
                                                name + ".transform");
      }
    }
    problems.push_back(std::move(fn));
  }
  return problems;
}

namespace {

RunRecord execute_cell(const ObjectiveFunction& problem,
                       const ExperimentConfig& cfg, const RunConfig& rde_cfg,
                       const BaselineConfig& de_cfg, std::size_t problem_index,
                       std::size_t run_index) {
  const std::uint64_t seed =
      cfg.base_seed + problem_index * cfg.runs + run_index;
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  if (cfg.algorithm == "rde") {
    RunConfig c = rde_cfg;
    c.seed = seed;
    result = run(problem, c);
  } else {
    BaselineConfig c = de_cfg;
    c.seed = seed;
    result = baseline_de_rand1(problem, c);
  }
  RunRecord record;
  record.problem = problem.name();
  record.run = run_index;
  record.seed = seed;
  record.final_error = result.error;
  record.nfes = result.nfes_used;
  record.wall_time = seconds_since(start);
  return record;
}

}  // namespace

BatchOutcome run_batch_collect(const ExperimentConfig& cfg, std::size_t jobs) {
  cfg.validate();
  const std::vector<ObjectiveFunction> problems = build_problems(cfg);
  const RunConfig rde_cfg =
      cfg.algorithm == "rde" ? resolve_run_config(cfg) : RunConfig{};
  const BaselineConfig de_cfg = cfg.algorithm == "de_rand1"
                                    ? resolve_baseline_config(cfg)
                                    : BaselineConfig{};

  const std::size_t total = problems.size() * cfg.runs;
  std::vector<RunRecord> cells(total);
  std::vector<char> done(total, 0);

  BatchOutcome outcome;
  std::mutex failure_mutex;
  std::atomic<bool> failed{false};
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t g = next.fetch_add(1);
      if (g >= total) return;
      const std::size_t pi = g / cfg.runs;
      const std::size_t r = g % cfg.runs;
      try {
        cells[g] = execute_cell(problems[pi], cfg, rde_cfg, de_cfg, pi, r);
        done[g] = 1;
      } catch (const std::exception& e) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failed.exchange(true)) {
          outcome.error = std::string(e.what());
        }
        return;
      }
    }
  };

  const std::size_t n_threads = std::max<std::size_t>(1, std::min(jobs, total));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  outcome.complete = !failed.load();
  outcome.records.reserve(total);
  for (std::size_t g = 0; g < total; ++g) {
    if (done[g]) outcome.records.push_back(std::move(cells[g]));
  }
  return outcome;
}

std::vector<RunRecord> run_batch(const ExperimentConfig& cfg, std::size_t jobs) {
  BatchOutcome outcome = run_batch_collect(cfg, jobs);
  if (!outcome.complete) {
    throw std::runtime_error("batch failed: " + outcome.error);
  }
  return std::move(outcome.records);
}

namespace {

constexpr const char* kResultsHeader =
    "problem,run,seed,final_error,nfes,wall_time";

}  // namespace

void write_results_csv(std::span<const RunRecord> records, std::ostream& os) {
  os << kResultsHeader << '\n';
  for (const RunRecord& r : records) {
    os << r.problem << ',' << r.run << ',' << r.seed << ','
       << format_double(r.final_error) << ',' << r.nfes << ','
       << format_double(r.wall_time) << '\n';
  }
}

std::vector<RunRecord> read_results_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || trim(line) != kResultsHeader) {
    throw ConfigError("results csv: bad or missing header");
  }
  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split(trim(line), ',');
    if (fields.size() != 6) {
      throw ConfigError("results csv line " + std::to_string(line_no) +
                        ": expected 6 fields");
    }
    RunRecord r;
    r.problem = fields[0];
    r.run = static_cast<std::size_t>(parse_u64(fields[1], "run"));
    r.seed = parse_u64(fields[2], "seed");
    r.final_error = parse_double(fields[3], "final_error");
    r.nfes = parse_u64(fields[4], "nfes");
    r.wall_time = parse_double(fields[5], "wall_time");
    records.push_back(std::move(r));
  }
  return records;
}

void write_results_csv_file(std::span<const RunRecord> records,
                            const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  write_results_csv(records, os);
}

std::vector<RunRecord> read_results_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open results csv: " + path);
  return read_results_csv(is);
}

namespace {

// Problems in first-seen order with their per-run errors.
std::vector<std::pair<std::string, std::vector<double>>> group_by_problem(
    std::span<const RunRecord> records) {
  std::vector<std::pair<std::string, std::vector<double>>> groups;
  for (const RunRecord& r : records) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == r.problem; });
    if (it == groups.end()) {
      groups.emplace_back(r.problem, std::vector<double>{});
      it = std::prev(groups.end());
    }
    it->second.push_back(r.final_error);
  }
  return groups;
}

}  // namespace

void write_summary_csv(std::span<const RunRecord> records, std::ostream& os) {
  os << "problem,mean,sd\n";
  for (const auto& [problem, errors] : group_by_problem(records)) {
    const Summary s = summarize(errors);
    os << problem << ',' << format_double(s.mean) << ',' << format_double(s.sd)
       << '\n';
  }
}

void write_summary_csv_file(std::span<const RunRecord> records,
                            const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  write_summary_csv(records, os);
}

Comparison compare_results(std::span<const RunRecord> first,
                           std::span<const RunRecord> second, double alpha) {
  const auto groups_a = group_by_problem(first);
  const auto groups_b = group_by_problem(second);
  if (groups_a.size() != groups_b.size()) {
    throw ConfigError("compare: result sets cover different problem lists");
  }
  Comparison cmp;
  std::vector<Verdict> verdicts;
  for (std::size_t i = 0; i < groups_a.size(); ++i) {
    if (groups_a[i].first != groups_b[i].first) {
      throw ConfigError("compare: result sets cover different problem lists");
    }
    CompareRow row;
    row.problem = groups_a[i].first;
    row.first = summarize(groups_a[i].second);
    row.second = summarize(groups_b[i].second);
    row.verdict =
        wilcoxon_rank_sum(groups_a[i].second, groups_b[i].second, alpha);
    verdicts.push_back(row.verdict);
    cmp.rows.push_back(std::move(row));
  }
  cmp.wtl = wtl_table(verdicts);
  return cmp;
}

void write_comparison_csv(const Comparison& comparison, std::ostream& os) {
  os << "problem,mean_a,sd_a,mean_b,sd_b,verdict\n";
  for (const CompareRow& row : comparison.rows) {
    os << row.problem << ',' << format_double(row.first.mean) << ','
       << format_double(row.first.sd) << ',' << format_double(row.second.mean)
       << ',' << format_double(row.second.sd) << ','
       << verdict_symbol(row.verdict) << '\n';
  }
}

std::string render_comparison(const Comparison& comparison) {
  int name_width = static_cast<int>(std::string("problem").size());
  for (const CompareRow& row : comparison.rows) {
    name_width = std::max(name_width, static_cast<int>(row.problem.size()));
  }
  char buf[256];
  std::ostringstream os;
  std::snprintf(buf, sizeof(buf), "%-*s  %12s  %12s  %12s  %12s  %7s\n",
                name_width, "problem", "mean_a", "sd_a", "mean_b", "sd_b",
                "verdict");
  os << buf;
  for (const CompareRow& row : comparison.rows) {
    std::snprintf(buf, sizeof(buf),
                  "%-*s  %12.4e  %12.4e  %12.4e  %12.4e  %7s\n", name_width,
                  row.problem.c_str(), row.first.mean, row.first.sd,
                  row.second.mean, row.second.sd, verdict_symbol(row.verdict));
    os << buf;
  }
  os << "W/T/L: " << comparison.wtl.wins << '/' << comparison.wtl.ties << '/'
     << comparison.wtl.losses << '\n';
  return os.str();
}

TimingResult run_timing(std::size_t dim) {
  TimingResult out;

  {
    const auto start = std::chrono::steady_clock::now();
    volatile double sink = 0.0;
    for (int i = 0; i < 1000000; ++i) {
      double x = 0.55 + static_cast<double>(i);
      x = x + x;
      x = x / 2.0;
      x = x * x;
      x = std::sqrt(x);
      x = std::log(x);
      x = std::exp(x);
      x = x / (x + 2.0);
      sink = x;
    }
    (void)sink;
    out.t0 = seconds_since(start);
  }

  constexpr std::uint64_t kTimingEvals = 200000;
  RngStream rng(424242);
  const ObjectiveFunction problem =
      with_random_transform(make_function("hybrid", dim, rng), rng);

  {
    std::vector<double> x(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      x[j] = rng.uniform(problem.bounds().lower[j], problem.bounds().upper[j]);
    }
    const auto start = std::chrono::steady_clock::now();
    volatile double sink = 0.0;
    for (std::uint64_t e = 0; e < kTimingEvals; ++e) {
      sink = problem.evaluate(x);
    }
    (void)sink;
    out.t1 = seconds_since(start);
  }

  RunConfig cfg = RunConfig::for_dimension(dim);
  cfg.max_nfes = kTimingEvals;
  for (std::uint64_t r = 0; r < 5; ++r) {
    cfg.seed = r + 1;
    const auto start = std::chrono::steady_clock::now();
    (void)run(problem, cfg);
    out.t2_runs.push_back(seconds_since(start));
  }
  out.t2_hat = std::accumulate(out.t2_runs.begin(), out.t2_runs.end(), 0.0) /
               static_cast<double>(out.t2_runs.size());
  out.complexity = (out.t2_hat - out.t1) / out.t0;
  return out;
}

}  // namespace rde
