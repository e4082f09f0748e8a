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

#include "hops/baselines.hpp"

#include <cmath>

namespace hops {

void PdBaselineConfig::validate(double op_norm) const {
  const double t = tau.value_or(1.0 / op_norm);
  const double s = sigma.value_or(1.0 / op_norm);
  if (!(t > 0.0) || !(s > 0.0)) {
    throw InputError("PD: step sizes must be positive");
  }
  if (t * s * op_norm * op_norm > 1.0 + 1e-12) {
    throw InputError("PD: tau * sigma * ||A||^2 must not exceed 1");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw InputError("PD: theta must lie in [0, 1]");
  }
  if (max_iterations < 1) throw InputError("PD: max_iterations must be >= 1");
  if (!(strong_convexity >= 0.0) || std::isinf(strong_convexity)) {
    throw InputError("PD: strong_convexity must be finite and >= 0");
  }
  if (gap_check_every < 1) throw InputError("PD: gap_check_every must be >= 1");
}

PdBaselineResult chambolle_pock_solve(const CompositeProblem& problem,
                                      const Vector& x0, const Vector& u0,
                                      const PdBaselineConfig& config,
                                      const StopRule& stop) {
  const double norm = problem.op_norm();
  if (!(norm > 0.0)) throw InputError("PD: ||A|| must be positive");
  config.validate(norm);
  if (x0.size() != problem.primal_dim() || u0.size() != problem.dual_dim()) {
    throw InputError("PD: starting point has the wrong dimension");
  }
  double tau = config.tau.value_or(1.0 / norm);
  double sigma = config.sigma.value_or(1.0 / norm);
  const double gamma = config.strong_convexity;
  const LinearMap& a = problem.map();
  const MaxStructure& omega2 = problem.max_structure();
  const bool track_dual = problem.has_dual();

  PdBaselineResult out;
  Vector x = x0;
  Vector u = u0;
  Vector x_bar = x0;
  TraceRecorder recorder(stop);
  bool stopped = false;
  for (std::int64_t k = 1; k <= config.max_iterations && !stopped; ++k) {
    u = omega2.phi_prox(1.0 / sigma, -a.forward(x_bar), 1.0, u);
    Vector x_next = composite_prox(1.0 / tau, a.adjoint(u), 1.0,
                                   problem.simple_term(), problem.domain(), x);
    double theta = config.theta;
    if (gamma > 0.0) {
      theta = 1.0 / std::sqrt(1.0 + 2.0 * gamma * tau);
      tau *= theta;
      sigma /= theta;
    }
    x_bar = x_next + theta * (x_next - x);
    x = std::move(x_next);

    const double primal = evaluate_primal(problem, x);
    if (primal < out.best_primal) {
      out.best_primal = primal;
      out.best_x = x;
    }
    std::optional<double> dual;
    if (track_dual && (k % config.gap_check_every == 0 ||
                       k == config.max_iterations)) {
      DualCertificate c = certify_dual(problem, u);
      dual = c.value;
      if (c.value > out.best_dual) {
        out.best_dual = c.value;
        out.best_u = std::move(c.point);
      }
      if (config.gap_tolerance &&
          out.best_primal - out.best_dual <= *config.gap_tolerance) {
        out.gap_reached = true;
        stopped = true;
      }
    }
    if (recorder.record(primal, dual, 1, std::nullopt)) stopped = true;
  }
  out.x = std::move(x);
  out.u = std::move(u);
  if (out.best_u.size() == 0) out.best_u = out.u;
  SolveStatus status = SolveStatus::kCompleted;
  if (config.gap_tolerance && !out.gap_reached) {
    status = SolveStatus::kIterationCap;
  }
  out.trace = recorder.finish(status);
  return out;
}

SmoothingRun nesterov_smoothing_solve(const CompositeProblem& problem,
                                      const Vector& x0, double eps,
                                      std::int64_t max_iterations,
                                      const ApgConfig& config,
                                      const StopRule& stop) {
  if (!(eps > 0.0)) throw InputError("smoothing: eps must be positive");
  SmoothingRun run;
  run.mu = eps / dual_diameter_sq(problem);
  run.result = apg_solve(problem, x0, max_iterations, run.mu, config, stop);
  run.converged = run.result.trace.status == SolveStatus::kTargetReached;
  return run;
}

}  // namespace hops
