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

#pragma once

#include "hops/problem.hpp"

namespace hops {

/// g = 0. Both prox-friendly and smooth (M = 0).
class ZeroTerm final : public SimpleTerm {
 public:
  double value(const Vector&) const override { return 0.0; }
  bool prox_friendly() const override { return true; }
  Vector prox(double c, const Vector& v, double weight,
              const Vector& x) const override;
  bool separable() const override { return true; }
  bool smooth() const override { return true; }
  Vector gradient(const Vector& x) const override;
  double smoothness() const override { return 0.0; }
};

/// g = lambda * ||x||_1.
class L1Term final : public SimpleTerm {
 public:
  explicit L1Term(double lambda);
  double lambda() const noexcept { return lambda_; }
  double value(const Vector& x) const override;
  bool prox_friendly() const override { return true; }
  Vector prox(double c, const Vector& v, double weight,
              const Vector& x) const override;
  bool separable() const override { return true; }

 private:
  double lambda_;
};

/// g = weight * ||X||_*, X the rows x cols matrix stored column-major.
class NuclearNormTerm final : public SimpleTerm {
 public:
  NuclearNormTerm(Index rows, Index cols, double weight = 1.0);
  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  double weight() const noexcept { return weight_; }
  double value(const Vector& x) const override;
  bool prox_friendly() const override { return true; }
  Vector prox(double c, const Vector& v, double weight,
              const Vector& x) const override;

 private:
  Index rows_;
  Index cols_;
  double weight_;
};

/// g = (lambda / 2) ||x - h||^2. Smooth with M = lambda and prox-friendly.
class QuadraticFidelityTerm final : public SimpleTerm {
 public:
  QuadraticFidelityTerm(double lambda, Vector anchor);
  double lambda() const noexcept { return lambda_; }
  const Vector& anchor() const noexcept { return anchor_; }
  double value(const Vector& x) const override;
  bool prox_friendly() const override { return true; }
  Vector prox(double c, const Vector& v, double weight,
              const Vector& x) const override;
  bool separable() const override { return true; }
  bool smooth() const override { return true; }
  Vector gradient(const Vector& x) const override;
  double smoothness() const override { return lambda_; }
  double strong_convexity() const override { return lambda_; }

 private:
  double lambda_;
  Vector anchor_;
};

}  // namespace hops
