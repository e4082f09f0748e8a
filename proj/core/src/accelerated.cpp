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

#include "hops/accelerated.hpp"

#include <cmath>

namespace hops {

void AccelerationSequence::advance() {
  ++k_;
  if (rule_ == SequenceRule::kClosedForm) {
    theta_ = 2.0 / static_cast<double>(k_ + 2);
    alpha_ = 2.0 / static_cast<double>(k_ + 1);
  } else {
    const double t2 = theta_ * theta_;
    theta_ = 0.5 * (std::sqrt(t2 * t2 + 4.0 * t2) - t2);
    alpha_ = theta_;
  }
}

double fista_momentum_next(double t) {
  return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
}

BacktrackResult backtracking_step(double l_try, double growth, double cap,
                                  const std::function<bool(double)>& accept) {
  if (!(growth > 1.0)) throw InputError("backtracking: growth must be > 1");
  if (!(l_try > 0.0)) throw InputError("backtracking: L must be positive");
  BacktrackResult out{l_try, 0};
  while (!accept(out.lipschitz)) {
    out.lipschitz *= growth;
    ++out.growths;
    if (out.lipschitz > cap) {
      throw NumericalError("backtracking: smoothness estimate exceeded cap");
    }
  }
  return out;
}

AcceleratedStepper::AcceleratedStepper(CompositeModel model, Vector x0,
                                       ApgVariant variant, SequenceRule rule,
                                       Backtracking backtracking, double sigma)
    : model_(std::move(model)),
      variant_(variant),
      seq_(rule),
      bt_(backtracking),
      sigma_(sigma),
      l_(model_.lipschitz),
      x0_(std::move(x0)) {
  require(model_.gradient && model_.prox, "stepper: incomplete model");
  require(model_.lipschitz > 0.0, "stepper: smoothness must be positive");
  require(sigma > 0.0, "stepper: sigma must be positive");
  if (bt_.enabled) {
    require(static_cast<bool>(model_.smooth_value),
            "stepper: backtracking needs smooth_value");
    l_ = model_.lipschitz * bt_.initial_fraction;
  }
  x_ = x0_;
  z_ = x0_;
  y_ = x0_;
  acc_grad_ = Vector::Zero(x0_.size());
}

Vector AcceleratedStepper::prox_step(double l, const Vector& grad,
                                     const Vector& point) {
  if (!bt_.enabled) return model_.prox(l, grad, 1.0, point);
  const double base = model_.smooth_value(point);
  Vector candidate;
  const auto accept = [&](double trial) {
    candidate = model_.prox(trial, grad, 1.0, point);
    const Vector d = candidate - point;
    // Relative slack absorbs rounding in s(candidate) - s(point).
    const double rhs = base + grad.dot(d) + 0.5 * trial * d.squaredNorm();
    return model_.smooth_value(candidate) <=
           rhs + 1e-12 * (1.0 + std::abs(base));
  };
  const auto res = backtracking_step(l, bt_.growth,
                                     bt_.cap_factor * model_.lipschitz, accept);
  l_ = res.lipschitz;
  return candidate;
}

void AcceleratedStepper::step_dual_averaging() {
  const double theta = seq_.theta();
  const double alpha = seq_.alpha();
  const Vector y = (1.0 - theta) * x_ + theta * z_;
  const Vector v = model_.gradient(y);
  Vector next = prox_step(l_, v, y);
  acc_grad_ += v / alpha;
  gamma_ += 1.0 / alpha;
  z_ = model_.prox(l_ / sigma_, acc_grad_, gamma_, x0_);
  x_ = std::move(next);
  seq_.advance();
}

void AcceleratedStepper::step_fista() {
  const Vector v = model_.gradient(y_);
  Vector next = prox_step(l_, v, y_);
  const double t_next = fista_momentum_next(t_);
  y_ = next + ((t_ - 1.0) / t_next) * (next - x_);
  x_ = std::move(next);
  t_ = t_next;
}

const Vector& AcceleratedStepper::step() {
  if (variant_ == ApgVariant::kDualAveraging) {
    step_dual_averaging();
  } else {
    step_fista();
  }
  ++k_;
  return x_;
}

}  // namespace hops
