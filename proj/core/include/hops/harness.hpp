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

// Batch runner for (problem x algorithm x eps) cells: computes or loads a
// reference optimum, runs every tuning-grid point until F - F_* <= eps, and
// reports the best grid point per cell.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hops/problem.hpp"
#include "hops/trace.hpp"

namespace hops {

enum class Algorithm { kPd, kApgD, kApgF, kHopsD, kHopsF, kPdHops };

/// "PD", "APG-D", "APG-F", "HOPS-D", "HOPS-F", "PD-HOPS".
std::string to_string(Algorithm algorithm);
/// Throws InputError on an unknown name.
Algorithm parse_algorithm(const std::string& name);

/// Problem id plus free-form instance parameters. Recognized ids and keys:
///   hinge_l1       lambda, samples, features, density, positive_fraction;
///                  data_path (LIBSVM file)
///   rof            lambda, noise_sd, crop_rows, crop_cols, crop_row0,
///                  crop_col0; image_path (PGM)
///   matrix_decomp  rows, cols, rank, corruption, noise_sd, lambda
///   polyhedron     dim, inequalities, equalities
///   absolute_loss  rows, cols
/// Every generator also reads `seed`.
struct ProblemSpec {
  std::string id;
  std::map<std::string, double> numbers;
  std::map<std::string, std::string> strings;

  double number(const std::string& key, double fallback) const;
  std::string text(const std::string& key, const std::string& fallback) const;
};

struct BuiltInstance {
  CompositeProblem problem;
  std::optional<Matrix> low_rank_truth;
  /// Known optimal value, when the construction guarantees one.
  std::optional<double> closed_form_optimum;
  /// Content hash of the instance (FNV-1a over spec and operator probes).
  std::string fingerprint;
  /// Optional exact polish: maps an approximate minimizer to candidate
  /// (x, u) pairs that the reference computation certifies and keeps if
  /// they improve the bounds.
  std::function<std::vector<std::pair<Vector, Vector>>(const Vector& x)>
      crossover;
};

BuiltInstance build_instance(const ProblemSpec& spec);

enum class ReferenceKind { kAuto, kClosedForm, kLongPd };

struct ReferencePolicy {
  ReferenceKind kind = ReferenceKind::kAuto;
  /// Certified gap target as a fraction of the smallest eps.
  double gap_factor = 1e-2;
  std::int64_t max_iterations = 2000000;
  /// Empty disables the on-disk cache.
  std::string cache_dir;
};

struct Reference {
  double primal = 0.0;             // F_* estimate (best F found)
  std::optional<double> dual;      // certified lower bound
  std::string source;              // closed_form | cache | pd
};

/// Runs PD in rounds of doubling length (warm-started), applying the
/// instance crossover after each round when one exists. Throws
/// NumericalError when the certified gap misses its target.
Reference compute_reference(const BuiltInstance& instance,
                            const ReferencePolicy& policy, double min_eps);

struct RunConfig {
  ProblemSpec problem;
  std::vector<Algorithm> algorithms;
  std::vector<double> eps;
  std::vector<std::int64_t> t_grid{10, 50, 100, 150, 200, 250,
                                   300, 350, 400, 500, 1000};
  std::vector<double> b_grid{1.2, 2, 2.5, 3, 3.5, 4, 5, 10, 25};
  /// PD steps tau = r / ||A||, sigma = 1 / (r ||A||) for each ratio r.
  std::vector<double> pd_step_ratios{1.0};
  int repetitions = 1;
  std::uint64_t seed = 0;
  ReferencePolicy reference;
  std::string output_dir = "hops_out";
  int jobs = 1;
  /// Iteration cap for a single run.
  std::int64_t max_iterations = 200000;
  bool record_wall_time = false;

  /// JSON document with sections problem / algorithms / eps / grids /
  /// reference / run. Throws ParseError on malformed input.
  static RunConfig from_json(const std::string& text);
  std::string to_json() const;
};

struct CellResult {
  Algorithm algorithm = Algorithm::kPd;
  double eps = 0.0;
  bool converged = false;
  std::int64_t iterations = 0;
  double time_mean = 0.0;
  double time_sd = 0.0;
  std::string best_params;
  SolveTrace trace;
  std::optional<Vector> solution;
};

struct ExperimentResult {
  Reference reference;
  std::vector<CellResult> cells;
  bool all_converged = true;
};

/// Runs one cell on an already-built instance.
CellResult run_cell(const BuiltInstance& instance, const Reference& reference,
                    Algorithm algorithm, double eps, const RunConfig& config);

/// Runs every cell (up to config.jobs in parallel), writes one trace CSV per
/// cell plus summary.csv and summary.txt under config.output_dir when it is
/// non-empty.
ExperimentResult run_experiment(const RunConfig& config);

/// Table with one row per algorithm and one column per eps:
/// "iterations (time mean +- sd)" or "DNF".
std::string format_summary(const std::string& problem,
                           const std::vector<CellResult>& cells);

/// Rebuilds the table from a summary.csv written by run_experiment.
std::string report_from_summary(const std::string& summary_csv_path);

}  // namespace hops
