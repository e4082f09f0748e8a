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

// Homotopy smoothing: a sequence of APG stages with geometrically decreasing
// smoothing, each warm-started from the previous stage's output.

#pragma once

#include <cstdint>
#include <vector>

#include "hops/apg.hpp"

namespace hops {

/// m = ceil(log_b(eps0 / eps)), computed without trusting a floating log.
/// Returns 0 when eps0 <= eps. Throws InputError unless b > 1 and both
/// accuracies are positive.
int stage_count(double eps0, double eps, double b);

struct StageSchedule {
  double eps0 = 1.0;
  double eps = 1e-3;
  double b = 2.0;
  /// Fixed per-stage iteration budget, used when per_stage is empty.
  std::int64_t t = 0;
  /// Optional budget for stage s at index s - 1 (the last entry repeats).
  std::vector<std::int64_t> per_stage;
  double mu1 = 0.0;

  /// mu1 = eps0 / (b D^2).
  static StageSchedule prox_friendly(double eps0, double eps, double b,
                                     std::int64_t t, double d_sq);
  /// mu1 = 2 eps0 / (3 b D^2).
  static StageSchedule smooth_g(double eps0, double eps, double b,
                                std::int64_t t, double d_sq);

  int stages() const { return stage_count(eps0, eps, b); }
  /// Smoothing parameter of stage s (1-based): mu1 / b^(s-1).
  double mu(int s) const;
  /// eps_s = eps0 / b^s.
  double stage_accuracy(int s) const;
  std::int64_t budget(int s) const;
  void validate() const;
};

/// ceil(2 b c D ||A|| / eps^(1 - theta)).
std::int64_t theory_stage_budget(double c, double theta, double d,
                                 double op_norm, double b, double eps);

/// max{ceil(3 D ||A|| b c / eps^(1-theta)),
///     ceil(sqrt(6 M eps_s) b c / eps^(1-theta))} for the smooth-g path.
std::int64_t theory_stage_budget_smooth_g(double c, double theta, double d,
                                          double op_norm, double smoothness_g,
                                          double b, double eps, double eps_s);

struct StageInfo {
  int stage = 0;
  double smoothing = 0.0;
  std::int64_t iterations = 0;
  double primal_end = 0.0;
};

struct HopsResult {
  Vector x;
  SolveTrace trace;
  std::vector<StageInfo> stages;
};

/// Prox-friendly path. `stop` can end the run early (e.g. F - F_* <= eps
/// against a reference); otherwise every stage runs its full budget.
HopsResult hops_solve(const CompositeProblem& problem, const Vector& x0,
                      const StageSchedule& schedule,
                      ApgVariant variant = ApgVariant::kDualAveraging,
                      const ApgConfig& config = {}, const StopRule& stop = {});

/// Smooth-g path: every stage runs the smooth-g APG.
HopsResult hops_smooth_g_solve(const CompositeProblem& problem,
                               const Vector& x0, const StageSchedule& schedule,
                               ApgVariant variant = ApgVariant::kDualAveraging,
                               const ApgConfig& config = {},
                               const StopRule& stop = {});

}  // namespace hops
