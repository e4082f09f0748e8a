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

#include "hops/smoothing.hpp"

namespace hops {

SmoothedOracle::SmoothedOracle(const CompositeProblem& problem, double mu)
    : problem_(&problem), mu_(mu) {
  if (!(mu > 0.0)) throw InputError("SmoothedOracle: mu must be positive");
  const double a = problem.op_norm();
  smoothness_ = a * a / mu;
}

SmoothedEval SmoothedOracle::evaluate(const Vector& x) const {
  const MaxStructure& ms = problem_->max_structure();
  const Vector z = problem_->map().forward(x);
  SmoothedEval out;
  out.argmax = ms.smoothed_argmax(z, mu_);
  out.value = z.dot(out.argmax) - ms.phi(out.argmax) -
              mu_ * ms.omega_plus(out.argmax);
  out.grad = problem_->map().adjoint(out.argmax);
  return out;
}

double SmoothedOracle::value(const Vector& x) const {
  const MaxStructure& ms = problem_->max_structure();
  const Vector z = problem_->map().forward(x);
  const Vector u = ms.smoothed_argmax(z, mu_);
  return z.dot(u) - ms.phi(u) - mu_ * ms.omega_plus(u);
}

DualSmoothedOracle::DualSmoothedOracle(const CompositeProblem& problem,
                                       double eta)
    : problem_(&problem), eta_(eta) {
  const DualMinOracle& dual = problem.dual();
  if (eta < 0.0) throw InputError("DualSmoothedOracle: eta must be >= 0");
  if (eta == 0.0 && !dual.exactly_smooth()) {
    throw InputError(
        "DualSmoothedOracle: eta = 0 requires an already smooth psi");
  }
  const double modulus = eta + problem.simple_term().strong_convexity();
  if (!(modulus > 0.0)) {
    throw InputError("DualSmoothedOracle: zero strong convexity");
  }
  const double a = problem.op_norm();
  smoothness_ = a * a / modulus;
}

DualSmoothedEval DualSmoothedOracle::evaluate(const Vector& u) const {
  const DualMinOracle& dual = problem_->dual();
  const Vector w = problem_->map().adjoint(u);
  DualSmoothedEval out;
  out.argmin = dual.smoothed_argmin(w, eta_);
  out.value = w.dot(out.argmin) + problem_->simple_term().value(out.argmin) +
              (eta_ > 0.0 ? eta_ * dual.omega(out.argmin) : 0.0);
  out.grad = problem_->map().forward(out.argmin);
  return out;
}

SmoothedEval smoothed_value_grad(const SmoothedOracle& oracle,
                                 const Vector& x) {
  return oracle.evaluate(x);
}

DualSmoothedEval dual_smoothed_value_grad(const DualSmoothedOracle& oracle,
                                          const Vector& u) {
  return oracle.evaluate(u);
}

double smoothness_constant(const SmoothedOracle& oracle) {
  return oracle.smoothness();
}

double smoothness_constant(const DualSmoothedOracle& oracle) {
  return oracle.smoothness();
}

}  // namespace hops
