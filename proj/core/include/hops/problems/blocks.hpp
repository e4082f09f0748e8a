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

// Reusable max-structures and dual oracles shared by the instance builders.

#pragma once

#include <functional>

#include "hops/problem.hpp"

namespace hops {

/// Omega2 = [lo, hi]^n, phi(u) = <p, u>.
class BoxLinearMax final : public MaxStructure {
 public:
  BoxLinearMax(double lo, double hi, Vector p);

  Index dim() const override { return p_.size(); }
  Vector project(const Vector& u) const override;
  double phi(const Vector& u) const override { return p_.dot(u); }
  Vector phi_prox(double c, const Vector& v, double weight,
                  const Vector& u) const override;
  double max_value(const Vector& z) const override;
  Vector smoothed_argmax(const Vector& z, double mu) const override;
  double dual_diameter_sq() const override;

  double lower() const noexcept { return lo_; }
  double upper() const noexcept { return hi_; }
  const Vector& linear_term() const noexcept { return p_; }

 private:
  double lo_;
  double hi_;
  Vector p_;
};

/// Omega2 = {u1 >= 0, ||u1|| <= 1} x {||u2|| <= 1}, phi(u) = <p, u>, with
/// u1 the first n1 coordinates. Either block may be empty.
class OrthantBallMax final : public MaxStructure {
 public:
  OrthantBallMax(Index n1, Vector p);

  Index dim() const override { return p_.size(); }
  Vector project(const Vector& u) const override;
  double phi(const Vector& u) const override { return p_.dot(u); }
  Vector phi_prox(double c, const Vector& v, double weight,
                  const Vector& u) const override;
  double max_value(const Vector& z) const override;
  Vector smoothed_argmax(const Vector& z, double mu) const override;
  /// One per nonempty block.
  double dual_diameter_sq() const override;

  Index inequality_rows() const noexcept { return n1_; }

 private:
  Index n1_;
  Vector p_;
};

/// Dual oracle for a norm-like g over R^d, optionally restricted to the ball
/// ||x|| <= radius (which must contain a minimizer of F). `shrink` maps w to
/// d(w) = w + z, z the point of -dom(g*) nearest -w (soft-thresholding for
/// the l1 norm, SVT for the nuclear norm, identity for g = 0). Then
///
///   psi(w)             = -radius ||d(w)||          (restricted)
///   psi(w)             = 0 if d(w) = 0, else -inf  (unrestricted)
///   x_eta(w)           = -d(w) min(1/eta, radius / ||d(w)||).
class NormBallDualOracle final : public DualMinOracle {
 public:
  using Shrink = std::function<Vector(const Vector& w)>;

  /// radius = kInf leaves the inner minimum unrestricted.
  NormBallDualOracle(Shrink shrink, double radius);

  double psi(const Vector& w) const override;
  Vector smoothed_argmin(const Vector& w, double eta) const override;
  double omega(const Vector& x) const override { return 0.5 * x.squaredNorm(); }
  double primal_diameter_sq() const override { return radius_ * radius_; }

  double radius() const noexcept { return radius_; }

 private:
  Shrink shrink_;
  double radius_;
};

/// Dual oracle for g(x) = (lambda/2)||x - h||^2 over R^d:
/// psi(w) = <w, h> - ||w||^2 / (2 lambda), x_eta = (lambda h - w)/(lambda + eta).
class QuadraticDualOracle final : public DualMinOracle {
 public:
  QuadraticDualOracle(double lambda, Vector anchor);

  double psi(const Vector& w) const override;
  Vector smoothed_argmin(const Vector& w, double eta) const override;
  double omega(const Vector& x) const override { return 0.5 * x.squaredNorm(); }
  double primal_diameter_sq() const override { return kInf; }
  bool exactly_smooth() const override { return true; }

 private:
  double lambda_;
  Vector anchor_;
};

/// u -> s u with s = min(1, scale(w)), for Omega2 star-shaped around 0.
class ScalingFeasibilityMap final : public DualFeasibilityMap {
 public:
  explicit ScalingFeasibilityMap(std::function<double(const Vector& w)> scale)
      : scale_(std::move(scale)) {}
  Vector restore(const Vector& u, const Vector& w) const override;

 private:
  std::function<double(const Vector&)> scale_;
};

}  // namespace hops
