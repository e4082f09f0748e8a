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

// Primal-dual homotopy smoothing. Each stage runs primal APG (smoothing mu_s)
// and dual APG (smoothing eta_s) side by side from the previous stage's pair
// and ends as soon as the exact duality gap drops to 2 (eps_s + eps). After
// m stages the returned pair satisfies F(x_m) - Phi(u_m) <= 4 eps.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hops/apg.hpp"

namespace hops {

struct PdHopsConfig {
  /// Initial gap bound; defaults to F(x0) - Phi(u0) when that is finite.
  std::optional<double> eps0;
  double eps = 1e-3;
  double b = 2.0;
  /// Gap check period, in primal iterations.
  std::int64_t check_every = 10;
  std::int64_t max_iters_per_stage = 100000;
  /// Dual iterations per primal iteration.
  int dual_per_primal = 1;
  ApgVariant variant = ApgVariant::kDualAveraging;
  SequenceRule sequence_rule = SequenceRule::kClosedForm;
  /// Run the dual stream on a second thread between gap checks. Results are
  /// identical to the sequential schedule.
  bool concurrent = false;
  /// Also certify with the weighted average of the primal stream's smoothed
  /// maximizers u_mu(y_k) (weights k + 1, reset every stage).
  bool certify_primal_average = true;

  void validate() const;
};

struct PdStageInfo {
  int stage = 0;
  double eps_s = 0.0;
  double mu = 0.0;
  double eta = 0.0;
  std::int64_t primal_iterations = 0;
  double gap = kInf;  // at the check that ended the stage
  bool certified = false;
};

struct PdHopsResult {
  Vector x;
  Vector u;  // the dual point whose value certified the last gap
  SolveTrace trace;
  std::vector<PdStageInfo> stages;
  /// Every stage met its gap test (false also when `stop` ended the run).
  bool converged = false;
  double final_gap = kInf;
  /// Primal updates only.
  std::int64_t primal_iterations = 0;
};

/// F(x) - Phi(u); +inf when Phi(u) = -inf.
double duality_gap(const CompositeProblem& problem, const Vector& x,
                   const Vector& u);

/// `stop` is applied to the primal stream after every primal iteration.
PdHopsResult pd_hops_solve(const CompositeProblem& problem, const Vector& x0,
                           const Vector& u0, const PdHopsConfig& config,
                           const StopRule& stop = {});

}  // namespace hops
