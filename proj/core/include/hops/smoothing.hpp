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

// Smoothed surrogates of the max-structure and of the dual inner minimum.
//
//   f_mu(x)    = max_u <Ax, u> - phi(u) - mu * omega_plus(u)
//   psi_eta(u) = min_x <A^T u, x> + g(x) + eta * omega(x)
//
// f_mu is ||A||^2 / mu smooth and satisfies
//   f_mu(x) <= f(x) <= f_mu(x) + mu D^2 / 2.

#pragma once

#include "hops/problem.hpp"

namespace hops {

struct SmoothedEval {
  double value = 0.0;
  Vector grad;     // A^T u_mu(x)
  Vector argmax;   // u_mu(x)
};

class SmoothedOracle {
 public:
  /// Throws InputError unless mu > 0.
  SmoothedOracle(const CompositeProblem& problem, double mu);

  SmoothedEval evaluate(const Vector& x) const;
  double value(const Vector& x) const;

  /// L_mu = ||A||^2 / mu.
  double smoothness() const noexcept { return smoothness_; }
  double mu() const noexcept { return mu_; }
  const CompositeProblem& problem() const noexcept { return *problem_; }

 private:
  const CompositeProblem* problem_;
  double mu_;
  double smoothness_;
};

struct DualSmoothedEval {
  double value = 0.0;
  Vector grad;     // A x_eta(u)
  Vector argmin;   // x_eta(u)
};

class DualSmoothedOracle {
 public:
  /// eta = 0 is accepted only when psi is already smooth.
  DualSmoothedOracle(const CompositeProblem& problem, double eta);

  DualSmoothedEval evaluate(const Vector& u) const;

  /// ||A||^2 / (eta + sigma_g), sigma_g the strong convexity of g.
  double smoothness() const noexcept { return smoothness_; }
  double eta() const noexcept { return eta_; }
  const CompositeProblem& problem() const noexcept { return *problem_; }

 private:
  const CompositeProblem* problem_;
  double eta_;
  double smoothness_;
};

/// Free-function forms of the oracles above.
SmoothedEval smoothed_value_grad(const SmoothedOracle& oracle, const Vector& x);
DualSmoothedEval dual_smoothed_value_grad(const DualSmoothedOracle& oracle,
                                          const Vector& u);
double smoothness_constant(const SmoothedOracle& oracle);
double smoothness_constant(const DualSmoothedOracle& oracle);

}  // namespace hops
