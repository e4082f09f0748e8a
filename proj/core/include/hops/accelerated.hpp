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

// Single-iteration accelerated proximal gradient machinery shared by the
// primal solver, the dual solver and the interleaved primal-dual loop.
//
// The stepper minimizes s(x) + h(x) where s is L-smooth and h is handled by a
// composite prox oracle. Dual maximization of Phi_eta is fed in as
// minimization of -psi_eta + phi.

#pragma once

#include <cstdint>
#include <functional>

#include "hops/types.hpp"

namespace hops {

enum class ApgVariant {
  kDualAveraging,  // two prox updates per iteration, z anchored at x0
  kFista,          // one prox update plus momentum extrapolation
};

enum class SequenceRule {
  kClosedForm,  // theta_k = 2/(k+2), alpha_k = 2/(k+1)
  kRecursive,   // alpha = theta, theta_{k+1} = (sqrt(t^4 + 4t^2) - t^2)/2
};

struct Backtracking {
  bool enabled = false;
  /// Starting estimate as a fraction of the nominal constant.
  double initial_fraction = 1.0 / 64.0;
  double growth = 2.0;
  /// Give up above cap_factor * nominal constant.
  double cap_factor = 1e12;
};

/// theta_k and alpha_k of the dual-averaging scheme.
class AccelerationSequence {
 public:
  explicit AccelerationSequence(SequenceRule rule) : rule_(rule) {}
  double theta() const noexcept { return theta_; }
  double alpha() const noexcept { return alpha_; }
  std::int64_t k() const noexcept { return k_; }
  void advance();

 private:
  SequenceRule rule_;
  std::int64_t k_ = 0;
  double theta_ = 1.0;
  double alpha_ = rule_ == SequenceRule::kClosedForm ? 2.0 : 1.0;
};

/// t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2.
double fista_momentum_next(double t);

/// The smooth part s and prox oracle for h of a composite objective.
struct CompositeModel {
  std::function<Vector(const Vector&)> gradient;
  /// Only needed with backtracking.
  std::function<double(const Vector&)> smooth_value;
  /// argmin_z (c/2)||z - x||^2 + <v, z> + weight * h(z) over the domain.
  std::function<Vector(double c, const Vector& v, double weight,
                       const Vector& x)>
      prox;
  double lipschitz = 0.0;
};

struct BacktrackResult {
  double lipschitz = 0.0;
  int growths = 0;
};

/// Smallest L_try * growth^j for which `accept(L)` holds. Throws
/// NumericalError once the candidate exceeds `cap`.
BacktrackResult backtracking_step(double l_try, double growth, double cap,
                                  const std::function<bool(double)>& accept);

/// One accelerated iteration per step(). Restarting means constructing a new
/// stepper: internal sequences start over at theta_0 = 1, V = 0, Gamma = 0.
class AcceleratedStepper {
 public:
  AcceleratedStepper(CompositeModel model, Vector x0, ApgVariant variant,
                     SequenceRule rule = SequenceRule::kClosedForm,
                     Backtracking backtracking = {}, double sigma = 1.0);

  /// Advances one iteration and returns x_{k+1}.
  const Vector& step();

  const Vector& current() const noexcept { return x_; }
  const Vector& anchor() const noexcept { return x0_; }
  std::int64_t iterations() const noexcept { return k_; }
  /// Constant used by the last step (differs from nominal with backtracking).
  double lipschitz() const noexcept { return l_; }
  /// Gamma_k = sum_j 1/alpha_j (dual averaging only).
  double accumulated_weight() const noexcept { return gamma_; }

 private:
  Vector prox_step(double l, const Vector& grad, const Vector& point);
  void step_dual_averaging();
  void step_fista();

  CompositeModel model_;
  ApgVariant variant_;
  AccelerationSequence seq_;
  Backtracking bt_;
  double sigma_;
  double l_;
  std::int64_t k_ = 0;

  Vector x0_;
  Vector x_;
  // dual averaging
  Vector z_;
  Vector acc_grad_;
  double gamma_ = 0.0;
  // fista
  Vector y_;
  double t_ = 1.0;
};

}  // namespace hops
