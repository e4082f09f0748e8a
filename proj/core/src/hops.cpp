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

#include "hops/hops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hops {

int stage_count(double eps0, double eps, double b) {
  if (!(b > 1.0)) throw InputError("schedule: b must be > 1");
  if (!(eps > 0.0) || !(eps0 > 0.0)) {
    throw InputError("schedule: accuracies must be positive");
  }
  const double ratio = eps0 / eps;
  int m = 0;
  double reach = 1.0;
  // Relative slack so that e.g. ratio = 100.00000000000001, b = 10 gives 2.
  while (reach * (1.0 + 1e-12) < ratio) {
    reach *= b;
    ++m;
  }
  return m;
}

StageSchedule StageSchedule::prox_friendly(double eps0, double eps, double b,
                                           std::int64_t t, double d_sq) {
  StageSchedule s;
  s.eps0 = eps0;
  s.eps = eps;
  s.b = b;
  s.t = t;
  s.mu1 = eps0 / (b * d_sq);
  return s;
}

StageSchedule StageSchedule::smooth_g(double eps0, double eps, double b,
                                      std::int64_t t, double d_sq) {
  StageSchedule s = prox_friendly(eps0, eps, b, t, d_sq);
  s.mu1 = 2.0 * eps0 / (3.0 * b * d_sq);
  return s;
}

double StageSchedule::mu(int s) const {
  return mu1 / std::pow(b, static_cast<double>(s - 1));
}

double StageSchedule::stage_accuracy(int s) const {
  return eps0 / std::pow(b, static_cast<double>(s));
}

std::int64_t StageSchedule::budget(int s) const {
  if (per_stage.empty()) return t;
  const auto i = static_cast<std::size_t>(s - 1);
  return i < per_stage.size() ? per_stage[i] : per_stage.back();
}

void StageSchedule::validate() const {
  stage_count(eps0, eps, b);
  if (!(mu1 > 0.0) || !std::isfinite(mu1)) {
    throw InputError("schedule: mu1 must be positive and finite");
  }
  if (per_stage.empty()) {
    if (t < 1) throw InputError("schedule: t must be >= 1");
  } else {
    for (auto ts : per_stage) {
      if (ts < 1) throw InputError("schedule: stage budgets must be >= 1");
    }
  }
}

std::int64_t theory_stage_budget(double c, double theta, double d,
                                 double op_norm, double b, double eps) {
  const double denom = std::pow(eps, 1.0 - theta);
  return static_cast<std::int64_t>(std::ceil(2.0 * b * c * d * op_norm / denom));
}

std::int64_t theory_stage_budget_smooth_g(double c, double theta, double d,
                                          double op_norm, double smoothness_g,
                                          double b, double eps, double eps_s) {
  const double denom = std::pow(eps, 1.0 - theta);
  const double first = std::ceil(3.0 * d * op_norm * b * c / denom);
  const double second = std::ceil(std::sqrt(6.0 * smoothness_g * eps_s) * b * c / denom);
  return static_cast<std::int64_t>(std::max(first, second));
}

namespace {

using ModelFactory =
    std::function<CompositeModel(const CompositeProblem&, double)>;

HopsResult run_stages(const CompositeProblem& problem, const Vector& x0,
                      const StageSchedule& schedule, ApgVariant variant,
                      const ApgConfig& config, const StopRule& stop,
                      const ModelFactory& factory) {
  schedule.validate();
  if (x0.size() != problem.primal_dim()) {
    throw InputError("HOPS: x0 has the wrong dimension");
  }
  const int m = schedule.stages();
  TraceRecorder recorder(stop);
  HopsResult result;
  Vector x = x0;
  bool stopped = false;
  for (int s = 1; s <= m && !stopped; ++s) {
    const double mu = schedule.mu(s);
    AcceleratedStepper stepper(factory(problem, mu), x, variant,
                               config.sequence_rule, config.backtracking,
                               config.sigma1);
    StageInfo info{s, mu, 0, 0.0};
    const std::int64_t budget = schedule.budget(s);
    for (std::int64_t k = 0; k < budget; ++k) {
      const Vector& xk = stepper.step();
      ++info.iterations;
      info.primal_end = evaluate_primal(problem, xk);
      if (recorder.record(info.primal_end, std::nullopt, s, mu)) {
        stopped = true;
        break;
      }
    }
    x = stepper.current();
    result.stages.push_back(info);
  }
  SolveStatus status = SolveStatus::kCompleted;
  if (stopped && !recorder.target_reached()) status = SolveStatus::kIterationCap;
  result.x = std::move(x);
  result.trace = recorder.finish(status);
  return result;
}

}  // namespace

HopsResult hops_solve(const CompositeProblem& problem, const Vector& x0,
                      const StageSchedule& schedule, ApgVariant variant,
                      const ApgConfig& config, const StopRule& stop) {
  return run_stages(problem, x0, schedule, variant, config, stop,
                    make_primal_model);
}

HopsResult hops_smooth_g_solve(const CompositeProblem& problem,
                               const Vector& x0, const StageSchedule& schedule,
                               ApgVariant variant, const ApgConfig& config,
                               const StopRule& stop) {
  return run_stages(problem, x0, schedule, variant, config, stop,
                    make_smooth_g_model);
}

}  // namespace hops
