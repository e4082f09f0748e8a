// Copyright 2026 The hops Authors
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

// hops: batch runner for the homotopy smoothing experiments.
//
//   hops run <config.json> [--seed N] [--out DIR] [--jobs J] [--eps E ...]
//                          [--algo NAME ...] [--problem ID]
//   hops reference <config.json> [--seed N] [--problem ID]
//   hops report <summary.csv | output dir>
//
// Exit codes: 0 success, 1 usage or input error, 2 a cell did not finish,
// 3 the reference could not be certified.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hops/harness.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitDnf = 2;
constexpr int kExitReference = 3;

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> jobs;
  std::vector<double> eps;
  std::vector<std::string> algorithms;
  std::optional<std::string> problem;
};

hops::RunConfig load_config(const std::string& path, const Overrides& o) {
  std::ifstream in(path);
  if (!in) throw hops::InputError("cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  hops::RunConfig cfg = hops::RunConfig::from_json(buffer.str());
  if (o.seed) cfg.seed = *o.seed;
  if (o.out) cfg.output_dir = *o.out;
  if (o.jobs) cfg.jobs = *o.jobs;
  if (!o.eps.empty()) cfg.eps = o.eps;
  if (!o.algorithms.empty()) {
    cfg.algorithms.clear();
    for (const auto& a : o.algorithms) {
      cfg.algorithms.push_back(hops::parse_algorithm(a));
    }
  }
  if (o.problem) cfg.problem.id = *o.problem;
  return cfg;
}

int do_run(const std::string& path, const Overrides& o) {
  const hops::RunConfig cfg = load_config(path, o);
  const auto result = hops::run_experiment(cfg);
  std::cout << "reference F_* = " << result.reference.primal << " ("
            << result.reference.source << ")\n"
            << hops::format_summary(cfg.problem.id, result.cells);
  if (!cfg.output_dir.empty()) {
    std::cout << "traces written to " << cfg.output_dir << '\n';
  }
  return result.all_converged ? 0 : kExitDnf;
}

int do_reference(const std::string& path, const Overrides& o) {
  hops::RunConfig cfg = load_config(path, o);
  if (cfg.eps.empty()) throw hops::InputError("config lists no eps values");
  if (!cfg.problem.numbers.count("seed")) {
    cfg.problem.numbers["seed"] = static_cast<double>(cfg.seed);
  }
  double min_eps = cfg.eps.front();
  for (double e : cfg.eps) min_eps = std::min(min_eps, e);
  const auto instance = hops::build_instance(cfg.problem);
  const auto ref = hops::compute_reference(instance, cfg.reference, min_eps);
  std::printf("problem %s\nfingerprint %s\nF_* %.17g\n", cfg.problem.id.c_str(),
              instance.fingerprint.c_str(), ref.primal);
  if (ref.dual) std::printf("Phi_* %.17g\ngap %.3g\n", *ref.dual, ref.primal - *ref.dual);
  std::printf("source %s\n", ref.source.c_str());
  return 0;
}

int do_report(const std::string& path) {
  std::filesystem::path p(path);
  if (std::filesystem::is_directory(p)) p /= "summary.csv";
  std::cout << hops::report_from_summary(p.string());
  return 0;
}

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--seed", o.seed, "Instance and run seed");
  cmd->add_option("--problem", o.problem, "Problem id override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy smoothing experiment runner"};
  app.require_subcommand(1);

  Overrides o;
  std::string config_path;
  std::string report_path;

  auto* run = app.add_subcommand("run", "Run every (algorithm, eps) cell of a config");
  run->add_option("config", config_path, "JSON run configuration")->required();
  add_overrides(run, o);
  run->add_option("--out", o.out, "Output directory for traces and summaries");
  run->add_option("--jobs", o.jobs, "Cells run in parallel")->check(CLI::PositiveNumber);
  run->add_option("--eps", o.eps, "Target accuracies")->expected(1, -1);
  run->add_option("--algo", o.algorithms,
                  "Algorithms: PD APG-D APG-F HOPS-D HOPS-F PD-HOPS")
      ->expected(1, -1);

  auto* ref = app.add_subcommand("reference", "Compute (or load) the reference optimum");
  ref->add_option("config", config_path, "JSON run configuration")->required();
  add_overrides(ref, o);
  ref->add_option("--eps", o.eps, "Target accuracies")->expected(1, -1);

  auto* report = app.add_subcommand("report", "Print the summary table of a finished run");
  report->add_option("path", report_path, "summary.csv or the run's output directory")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return do_run(config_path, o);
    if (ref->parsed()) return do_reference(config_path, o);
    return do_report(report_path);
  } catch (const hops::NumericalError& e) {
    std::cerr << "hops: " << e.what() << '\n';
    return kExitReference;
  } catch (const std::exception& e) {
    std::cerr << "hops: " << e.what() << '\n';
    return kExitInput;
  }
}
