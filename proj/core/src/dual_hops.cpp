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

#include "hops/dual_hops.hpp"

#include <cmath>
#include <memory>

namespace hops {

DualStageSchedule DualStageSchedule::make(double eps0, double eps, double b,
                                          std::int64_t t, double d_tilde_sq) {
  DualStageSchedule s;
  s.eps0 = eps0;
  s.eps = eps;
  s.b = b;
  s.t = t;
  s.eta1 = std::isfinite(d_tilde_sq) ? eps0 / (b * d_tilde_sq) : 0.0;
  return s;
}

double DualStageSchedule::eta(int s) const {
  return eta1 / std::pow(b, static_cast<double>(s - 1));
}

std::int64_t DualStageSchedule::budget(int s) const {
  if (per_stage.empty()) return t;
  const auto i = static_cast<std::size_t>(s - 1);
  return i < per_stage.size() ? per_stage[i] : per_stage.back();
}

void DualStageSchedule::validate() const {
  stage_count(eps0, eps, b);
  if (!(eta1 >= 0.0) || !std::isfinite(eta1)) {
    throw InputError("dual schedule: eta1 must be finite and >= 0");
  }
  if (per_stage.empty() && t < 1) {
    throw InputError("dual schedule: t must be >= 1");
  }
  for (auto ts : per_stage) {
    if (ts < 1) throw InputError("dual schedule: stage budgets must be >= 1");
  }
}

CompositeModel make_dual_model(const CompositeProblem& problem, double eta) {
  auto oracle = std::make_shared<DualSmoothedOracle>(problem, eta);
  const MaxStructure* omega2 = &problem.max_structure();
  CompositeModel model;
  model.gradient = [oracle](const Vector& u) {
    return Vector(-oracle->evaluate(u).grad);
  };
  model.smooth_value = [oracle](const Vector& u) {
    return -oracle->evaluate(u).value;
  };
  model.prox = [omega2](double c, const Vector& v, double weight,
                        const Vector& u) {
    return omega2->phi_prox(c, v, weight, u);
  };
  model.lipschitz = oracle->smoothness();
  return model;
}

namespace {

// Phi(u) exactly; F at the smoothed inner minimizer as a primal companion.
std::pair<double, double> dual_record(const CompositeProblem& problem,
                                      const Vector& u, double eta) {
  const Vector w = problem.map().adjoint(u);
  const double eta_eval =
      (eta == 0.0 && !problem.dual().exactly_smooth()) ? 1e-12 : eta;
  const Vector x = problem.dual().smoothed_argmin(w, eta_eval);
  return {evaluate_primal(problem, x), evaluate_dual(problem, u)};
}

void check_u0(const CompositeProblem& problem, const Vector& u0) {
  if (u0.size() != problem.dual_dim()) {
    throw InputError("dual solve: u0 has the wrong dimension");
  }
  if (!problem.has_dual()) {
    throw UnsupportedOperation("dual solve: problem has no dual oracle");
  }
}

}  // namespace

DualSolveResult dapg_solve(const CompositeProblem& problem, const Vector& u0,
                           std::int64_t t, double eta, const ApgConfig& config,
                           const StopRule& stop) {
  check_u0(problem, u0);
  if (t < 1) throw InputError("DAPG: t must be >= 1");
  AcceleratedStepper stepper(make_dual_model(problem, eta), u0, config.variant,
                             config.sequence_rule, config.backtracking,
                             config.sigma1);
  TraceRecorder recorder(stop);
  SolveStatus status = SolveStatus::kCompleted;
  for (std::int64_t k = 0; k < t; ++k) {
    const Vector& u = stepper.step();
    const auto [primal, dual] = dual_record(problem, u, eta);
    if (recorder.record(primal, dual, 1, eta)) {
      if (!recorder.target_reached()) status = SolveStatus::kIterationCap;
      break;
    }
  }
  DualSolveResult result;
  result.u = stepper.current();
  result.trace = recorder.finish(status);
  return result;
}

DualSolveResult dual_hops_solve(const CompositeProblem& problem,
                                const Vector& u0,
                                const DualStageSchedule& schedule,
                                const ApgConfig& config,
                                const StopRule& stop) {
  check_u0(problem, u0);
  schedule.validate();
  const int m = schedule.stages();
  TraceRecorder recorder(stop);
  DualSolveResult result;
  Vector u = u0;
  bool stopped = false;
  for (int s = 1; s <= m && !stopped; ++s) {
    const double eta = schedule.eta(s);
    AcceleratedStepper stepper(make_dual_model(problem, eta), u,
                               config.variant, config.sequence_rule,
                               config.backtracking, config.sigma1);
    StageInfo info{s, eta, 0, 0.0};
    for (std::int64_t k = 0; k < schedule.budget(s); ++k) {
      const Vector& uk = stepper.step();
      ++info.iterations;
      const auto [primal, dual] = dual_record(problem, uk, eta);
      info.primal_end = primal;
      if (recorder.record(primal, dual, s, eta)) {
        stopped = true;
        break;
      }
    }
    u = stepper.current();
    result.stages.push_back(info);
  }
  SolveStatus status = SolveStatus::kCompleted;
  if (stopped && !recorder.target_reached()) status = SolveStatus::kIterationCap;
  result.u = std::move(u);
  result.trace = recorder.finish(status);
  return result;
}

}  // namespace hops
