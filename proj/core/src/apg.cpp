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

#include "hops/apg.hpp"

#include <memory>

namespace hops {

CompositeModel make_primal_model(const CompositeProblem& problem, double mu) {
  auto oracle = std::make_shared<SmoothedOracle>(problem, mu);
  if (!problem.simple_term().prox_friendly()) {
    throw UnsupportedOperation("g has no proximal oracle; use the smooth-g path");
  }
  CompositeModel model;
  model.gradient = [oracle](const Vector& y) { return oracle->evaluate(y).grad; };
  model.smooth_value = [oracle](const Vector& y) { return oracle->value(y); };
  const CompositeProblem* p = &problem;
  model.prox = [p](double c, const Vector& v, double weight, const Vector& x) {
    return composite_prox(c, v, weight, p->simple_term(), p->domain(), x);
  };
  model.lipschitz = oracle->smoothness();
  return model;
}

CompositeModel make_smooth_g_model(const CompositeProblem& problem,
                                   double mu) {
  const SimpleTerm& g = problem.simple_term();
  if (!g.smooth()) {
    throw UnsupportedOperation("apg_smooth_g_solve: g is not smooth");
  }
  auto oracle = std::make_shared<SmoothedOracle>(problem, mu);
  const SimpleTerm* gp = &g;
  CompositeModel model;
  model.gradient = [oracle, gp](const Vector& y) {
    return Vector(oracle->evaluate(y).grad + gp->gradient(y));
  };
  model.smooth_value = [oracle, gp](const Vector& y) {
    return oracle->value(y) + gp->value(y);
  };
  const PrimalDomain domain = problem.domain();
  model.prox = [domain](double c, const Vector& v, double, const Vector& x) {
    return projected_step(c, v, domain, x);
  };
  model.lipschitz = oracle->smoothness() + g.smoothness();
  return model;
}

namespace {

void check_common(const CompositeProblem& problem, const Vector& x0,
                  std::int64_t t, double mu) {
  if (t < 1) throw InputError("APG: t must be >= 1");
  if (!(mu > 0.0)) throw InputError("APG: mu must be positive");
  if (x0.size() != problem.primal_dim()) {
    throw InputError("APG: x0 has the wrong dimension");
  }
}

SolveResult run(const CompositeProblem& problem, CompositeModel model,
                const Vector& x0, std::int64_t t, double mu,
                ApgVariant variant, const ApgConfig& config,
                const StopRule& stop) {
  std::unique_ptr<SmoothedOracle> smoothed;
  if (config.record_smoothed) {
    smoothed = std::make_unique<SmoothedOracle>(problem, mu);
  }
  AcceleratedStepper stepper(std::move(model), x0, variant,
                             config.sequence_rule, config.backtracking,
                             config.sigma1);
  TraceRecorder recorder(stop);
  SolveResult result;
  SolveStatus status = SolveStatus::kCompleted;
  for (std::int64_t k = 0; k < t; ++k) {
    const Vector& x = stepper.step();
    if (smoothed) {
      result.smoothed_values.push_back(smoothed->value(x) +
                                       problem.simple_term().value(x));
    }
    if (recorder.record(evaluate_primal(problem, x), std::nullopt, 1, mu)) {
      if (!recorder.target_reached()) status = SolveStatus::kIterationCap;
      break;
    }
  }
  result.x = stepper.current();
  result.trace = recorder.finish(status);
  return result;
}

}  // namespace

SolveResult apg_solve(const CompositeProblem& problem, const Vector& x0,
                      std::int64_t t, double mu, const ApgConfig& config,
                      const StopRule& stop) {
  check_common(problem, x0, t, mu);
  return run(problem, make_primal_model(problem, mu), x0, t, mu,
             config.variant, config, stop);
}

SolveResult fista_solve(const CompositeProblem& problem, const Vector& x0,
                        std::int64_t t, double mu, const ApgConfig& config,
                        const StopRule& stop) {
  check_common(problem, x0, t, mu);
  return run(problem, make_primal_model(problem, mu), x0, t, mu,
             ApgVariant::kFista, config, stop);
}

SolveResult apg_smooth_g_solve(const CompositeProblem& problem,
                               const Vector& x0, std::int64_t t, double mu,
                               const ApgConfig& config, const StopRule& stop) {
  check_common(problem, x0, t, mu);
  return run(problem, make_smooth_g_model(problem, mu), x0, t, mu,
             config.variant, config, stop);
}

}  // namespace hops
