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

// Comparators: the first-order primal-dual method of Chambolle and Pock on
// the saddle form min_x max_u <Ax, u> - phi(u) + g(x), and single-shot
// Nesterov smoothing (one APG run with mu = eps / D^2).

#pragma once

#include <cstdint>
#include <optional>

#include "hops/apg.hpp"

namespace hops {

struct PdBaselineConfig {
  /// Primal and dual steps; both default to 1 / ||A||.
  std::optional<double> tau;
  std::optional<double> sigma;
  /// Over-relaxation x_bar = x_{k+1} + theta (x_{k+1} - x_k).
  double theta = 1.0;
  std::int64_t max_iterations = 100000;
  /// Stop once the certified duality gap is at most this.
  std::optional<double> gap_tolerance;
  /// Period of the (comparatively expensive) dual evaluation.
  std::int64_t gap_check_every = 10;
  /// Strong-convexity modulus of g. When positive, steps adapt every
  /// iteration (theta_k = 1 / sqrt(1 + 2 gamma tau_k), tau_{k+1} = theta_k
  /// tau_k, sigma_{k+1} = sigma_k / theta_k) and `theta` is ignored.
  double strong_convexity = 0.0;

  void validate(double op_norm) const;
};

struct PdBaselineResult {
  Vector x;
  Vector u;
  SolveTrace trace;
  /// Smallest F seen and largest certified Phi seen. Their difference bounds
  /// the suboptimality of both.
  double best_primal = kInf;
  double best_dual = -kInf;
  Vector best_x;
  Vector best_u;
  bool gap_reached = false;
};

/// u_{k+1} = argmin_z (1/(2 sigma))||z - u_k||^2 - <A x_bar, z> + phi(z),
/// x_{k+1} = argmin_z (1/(2 tau))||z - x_k||^2 + <A^T u_{k+1}, z> + g(z).
PdBaselineResult chambolle_pock_solve(const CompositeProblem& problem,
                                      const Vector& x0, const Vector& u0,
                                      const PdBaselineConfig& config = {},
                                      const StopRule& stop = {});

struct SmoothingRun {
  SolveResult result;
  double mu = 0.0;
  bool converged = false;  // stop target met before the cap
};

/// APG with fixed mu = eps / D^2 for at most `max_iterations`, stopping per
/// `stop` (normally F - F_* <= eps).
SmoothingRun nesterov_smoothing_solve(const CompositeProblem& problem,
                                      const Vector& x0, double eps,
                                      std::int64_t max_iterations,
                                      const ApgConfig& config = {},
                                      const StopRule& stop = {});

}  // namespace hops
