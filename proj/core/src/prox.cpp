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

#include "hops/prox.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "hops/terms.hpp"

namespace hops::prox {

Vector soft_threshold(const Vector& x, double level) {
  Vector out(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]) - level;
    out[i] = a > 0.0 ? std::copysign(a, x[i]) : 0.0;
  }
  return out;
}

namespace {

Eigen::BDCSVD<Matrix> svd_of(const Vector& x, Index rows, Index cols,
                             unsigned int options) {
  require(x.size() == rows * cols, "matrix view: size mismatch");
  const Eigen::Map<const Matrix> m(x.data(), rows, cols);
  return Eigen::BDCSVD<Matrix>(m, options);
}

}  // namespace

Vector singular_value_threshold(const Vector& x, Index rows, Index cols,
                                double level) {
  const auto svd = svd_of(x, rows, cols, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector s = svd.singularValues();
  Index keep = 0;
  for (Index i = 0; i < s.size(); ++i) {
    s[i] = std::max(s[i] - level, 0.0);
    if (s[i] > 0.0) keep = i + 1;
  }
  Vector out = Vector::Zero(rows * cols);
  if (keep == 0) return out;
  Eigen::Map<Matrix> z(out.data(), rows, cols);
  z.noalias() = svd.matrixU().leftCols(keep) * s.head(keep).asDiagonal() *
                svd.matrixV().leftCols(keep).transpose();
  return out;
}

double nuclear_norm(const Vector& x, Index rows, Index cols) {
  return svd_of(x, rows, cols, 0).singularValues().sum();
}

double spectral_norm(const Vector& x, Index rows, Index cols) {
  const auto s = svd_of(x, rows, cols, 0).singularValues();
  return s.size() == 0 ? 0.0 : s[0];
}

Vector clamp(const Vector& x, double lo, double hi) {
  return x.cwiseMax(lo).cwiseMin(hi);
}

Vector project_ball(const Vector& u, double radius) {
  const double n = u.norm();
  if (n <= radius) return u;
  return u * (radius / n);
}

Vector project_nonneg_ball(const Vector& u, double radius) {
  return project_ball(u.cwiseMax(0.0), radius);
}

Vector project_pixel_disks(const Vector& u) {
  require(u.size() % 2 == 0, "project_pixel_disks: odd length");
  const Index n = u.size() / 2;
  Vector out = u;
  for (Index i = 0; i < n; ++i) {
    const double a = u[i];
    const double b = u[n + i];
    const double r = std::sqrt(a * a + b * b);
    if (r > 1.0) {
      out[i] = a / r;
      out[n + i] = b / r;
    }
  }
  return out;
}

}  // namespace hops::prox

namespace hops {

namespace {

void check_prox_args(double c, double weight, const Vector& v,
                     const Vector& x) {
  if (!(c > 0.0)) throw InputError("composite prox: c must be positive");
  if (weight < 0.0) throw InputError("composite prox: weight must be >= 0");
  if (v.size() != x.size()) {
    throw InputError("composite prox: v and x differ in length");
  }
}

}  // namespace

Vector ZeroTerm::prox(double c, const Vector& v, double weight,
                      const Vector& x) const {
  check_prox_args(c, weight, v, x);
  return x - v / c;
}

Vector ZeroTerm::gradient(const Vector& x) const {
  return Vector::Zero(x.size());
}

L1Term::L1Term(double lambda) : lambda_(lambda) {
  require(lambda >= 0.0, "L1Term: lambda must be >= 0");
}

double L1Term::value(const Vector& x) const {
  return lambda_ * x.lpNorm<1>();
}

Vector L1Term::prox(double c, const Vector& v, double weight,
                    const Vector& x) const {
  check_prox_args(c, weight, v, x);
  return prox::soft_threshold(x - v / c, weight * lambda_ / c);
}

NuclearNormTerm::NuclearNormTerm(Index rows, Index cols, double weight)
    : rows_(rows), cols_(cols), weight_(weight) {
  require(rows >= 1 && cols >= 1, "NuclearNormTerm: empty shape");
  require(weight >= 0.0, "NuclearNormTerm: weight must be >= 0");
}

double NuclearNormTerm::value(const Vector& x) const {
  return weight_ * prox::nuclear_norm(x, rows_, cols_);
}

Vector NuclearNormTerm::prox(double c, const Vector& v, double weight,
                             const Vector& x) const {
  check_prox_args(c, weight, v, x);
  return prox::singular_value_threshold(x - v / c, rows_, cols_,
                                        weight * weight_ / c);
}

QuadraticFidelityTerm::QuadraticFidelityTerm(double lambda, Vector anchor)
    : lambda_(lambda), anchor_(std::move(anchor)) {
  require(lambda >= 0.0, "QuadraticFidelityTerm: lambda must be >= 0");
}

double QuadraticFidelityTerm::value(const Vector& x) const {
  return 0.5 * lambda_ * (x - anchor_).squaredNorm();
}

Vector QuadraticFidelityTerm::prox(double c, const Vector& v, double weight,
                                   const Vector& x) const {
  check_prox_args(c, weight, v, x);
  // Stationarity: c (z - x) + v + weight * lambda (z - h) = 0.
  const double k = weight * lambda_;
  return (c * x - v + k * anchor_) / (c + k);
}

Vector QuadraticFidelityTerm::gradient(const Vector& x) const {
  return lambda_ * (x - anchor_);
}

}  // namespace hops
