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

#include "hops/problems/blocks.hpp"

#include <algorithm>
#include <cmath>

#include "hops/prox.hpp"

namespace hops {

BoxLinearMax::BoxLinearMax(double lo, double hi, Vector p)
    : lo_(lo), hi_(hi), p_(std::move(p)) {
  require(lo <= hi, "box: lower bound exceeds upper bound");
  require(std::isfinite(lo) && std::isfinite(hi), "box: bounds must be finite");
}

Vector BoxLinearMax::project(const Vector& u) const {
  return prox::clamp(u, lo_, hi_);
}

Vector BoxLinearMax::phi_prox(double c, const Vector& v, double weight,
                              const Vector& u) const {
  require(c > 0.0, "box prox: c must be positive");
  return prox::clamp(u - (v + weight * p_) / c, lo_, hi_);
}

double BoxLinearMax::max_value(const Vector& z) const {
  double total = 0.0;
  for (Index i = 0; i < z.size(); ++i) {
    const double s = z[i] - p_[i];
    total += s > 0.0 ? hi_ * s : lo_ * s;
  }
  return total;
}

Vector BoxLinearMax::smoothed_argmax(const Vector& z, double mu) const {
  return prox::clamp((z - p_) / mu, lo_, hi_);
}

double BoxLinearMax::dual_diameter_sq() const {
  return static_cast<double>(p_.size()) * std::max(lo_ * lo_, hi_ * hi_);
}

OrthantBallMax::OrthantBallMax(Index n1, Vector p) : n1_(n1), p_(std::move(p)) {
  require(n1 >= 0 && n1 <= p_.size(), "orthant-ball: bad block split");
}

namespace {

Vector project_blocks(const Vector& u, Index n1) {
  Vector out(u.size());
  const Index n2 = u.size() - n1;
  if (n1 > 0) out.head(n1) = prox::project_nonneg_ball(u.head(n1));
  if (n2 > 0) out.tail(n2) = prox::project_ball(u.tail(n2));
  return out;
}

}  // namespace

Vector OrthantBallMax::project(const Vector& u) const {
  return project_blocks(u, n1_);
}

Vector OrthantBallMax::phi_prox(double c, const Vector& v, double weight,
                                const Vector& u) const {
  require(c > 0.0, "orthant-ball prox: c must be positive");
  return project_blocks(u - (v + weight * p_) / c, n1_);
}

double OrthantBallMax::max_value(const Vector& z) const {
  const Vector s = z - p_;
  const Index n2 = s.size() - n1_;
  const double first = n1_ > 0 ? s.head(n1_).cwiseMax(0.0).norm() : 0.0;
  const double second = n2 > 0 ? s.tail(n2).norm() : 0.0;
  return first + second;
}

Vector OrthantBallMax::smoothed_argmax(const Vector& z, double mu) const {
  return project_blocks((z - p_) / mu, n1_);
}

double OrthantBallMax::dual_diameter_sq() const {
  return (n1_ > 0 ? 1.0 : 0.0) + (p_.size() - n1_ > 0 ? 1.0 : 0.0);
}

NormBallDualOracle::NormBallDualOracle(Shrink shrink, double radius)
    : shrink_(std::move(shrink)), radius_(radius) {
  require(radius > 0.0, "norm-ball dual: radius must be positive");
}

double NormBallDualOracle::psi(const Vector& w) const {
  const double norm = shrink_(w).norm();
  if (std::isinf(radius_)) return norm == 0.0 ? 0.0 : -kInf;
  return -radius_ * norm;
}

Vector NormBallDualOracle::smoothed_argmin(const Vector& w, double eta) const {
  require(eta > 0.0 || std::isfinite(radius_),
          "norm-ball dual: eta = 0 needs a finite radius");
  const Vector d = shrink_(w);
  const double norm = d.norm();
  if (norm == 0.0) return Vector::Zero(w.size());
  const double scale = eta > 0.0 ? std::min(1.0 / eta, radius_ / norm)
                                 : radius_ / norm;
  return -scale * d;
}

QuadraticDualOracle::QuadraticDualOracle(double lambda, Vector anchor)
    : lambda_(lambda), anchor_(std::move(anchor)) {
  require(lambda > 0.0, "quadratic dual: lambda must be positive");
}

double QuadraticDualOracle::psi(const Vector& w) const {
  return w.dot(anchor_) - w.squaredNorm() / (2.0 * lambda_);
}

Vector QuadraticDualOracle::smoothed_argmin(const Vector& w,
                                            double eta) const {
  require(eta >= 0.0, "quadratic dual: eta must be >= 0");
  return (lambda_ * anchor_ - w) / (lambda_ + eta);
}

Vector ScalingFeasibilityMap::restore(const Vector& u, const Vector& w) const {
  const double s = scale_(w);
  if (!(s < 1.0)) return u;
  // Land strictly inside so a rounding error cannot reopen the gap to -inf.
  return (s * (1.0 - 1e-12)) * u;
}

}  // namespace hops
