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

// Accelerated proximal gradient on F_mu = f_mu + g for a fixed mu.
//
// With theta_k = 2/(k+2), alpha_k = 2/(k+1) (or the recursive rule) the
// dual-averaging variant guarantees, for any x,
//
//   F_mu(x_t) - F_mu(x) <= 2 L_mu ||x - x0||^2 / t^2,
//   F(x_t)    - F(x)    <= mu D^2 / 2 + 2 L_mu ||x - x0||^2 / t^2.

#pragma once

#include <cstdint>
#include <vector>

#include "hops/accelerated.hpp"
#include "hops/problem.hpp"
#include "hops/smoothing.hpp"
#include "hops/trace.hpp"

namespace hops {

struct ApgConfig {
  ApgVariant variant = ApgVariant::kDualAveraging;
  SequenceRule sequence_rule = SequenceRule::kClosedForm;
  Backtracking backtracking;
  /// Strong convexity of ||x - x0||^2 / 2 (1 for the Euclidean norm).
  double sigma1 = 1.0;
  /// Also keep F_mu(x_k) per iteration in SolveResult::smoothed_values.
  bool record_smoothed = false;
};

struct SolveResult {
  Vector x;
  SolveTrace trace;
  std::vector<double> smoothed_values;
};

/// Model for f_mu + g with the composite prox of g over Omega1.
CompositeModel make_primal_model(const CompositeProblem& problem, double mu);

/// Model for (f_mu + g) + indicator(Omega1): g enters through its gradient and
/// the smoothness constant is L_mu + M.
CompositeModel make_smooth_g_model(const CompositeProblem& problem, double mu);

/// Runs exactly t iterations (unless `stop` fires). config.variant picks
/// dual averaging or the FISTA form.
SolveResult apg_solve(const CompositeProblem& problem, const Vector& x0,
                      std::int64_t t, double mu, const ApgConfig& config = {},
                      const StopRule& stop = {});

/// FISTA form regardless of config.variant.
SolveResult fista_solve(const CompositeProblem& problem, const Vector& x0,
                        std::int64_t t, double mu, const ApgConfig& config = {},
                        const StopRule& stop = {});

/// Variant for smooth g: gradient of f_mu + g and plain projection steps.
/// Throws UnsupportedOperation when g is not smooth.
SolveResult apg_smooth_g_solve(const CompositeProblem& problem,
                               const Vector& x0, std::int64_t t, double mu,
                               const ApgConfig& config = {},
                               const StopRule& stop = {});

}  // namespace hops
