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

#include "hops/problems/rof.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "hops/problems/blocks.hpp"
#include "hops/prox.hpp"
#include "hops/terms.hpp"

namespace hops {

namespace {

void gradient_into(const Vector& x, Index rows, Index cols, Vector& out) {
  const Index n = rows * cols;
  out.setZero(2 * n);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const Index p = i * cols + j;
      if (i + 1 < rows) out[p] = x[p + cols] - x[p];
      if (j + 1 < cols) out[n + p] = x[p + 1] - x[p];
    }
  }
}

// grad^T u, i.e. -div u.
void gradient_adjoint_into(const Vector& u, Index rows, Index cols,
                           Vector& out) {
  const Index n = rows * cols;
  out.setZero(n);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const Index p = i * cols + j;
      if (i + 1 < rows) {
        out[p] -= u[p];
        out[p + cols] += u[p];
      }
      if (j + 1 < cols) {
        out[p] -= u[n + p];
        out[p + 1] += u[n + p];
      }
    }
  }
}

class PixelDiskMax final : public MaxStructure {
 public:
  explicit PixelDiskMax(Index pixels) : pixels_(pixels) {}

  Index dim() const override { return 2 * pixels_; }
  Vector project(const Vector& u) const override {
    return prox::project_pixel_disks(u);
  }
  double phi(const Vector&) const override { return 0.0; }
  Vector phi_prox(double c, const Vector& v, double,
                  const Vector& u) const override {
    require(c > 0.0, "disk prox: c must be positive");
    return prox::project_pixel_disks(u - v / c);
  }
  double max_value(const Vector& z) const override {
    double total = 0.0;
    for (Index p = 0; p < pixels_; ++p) {
      total += std::hypot(z[p], z[pixels_ + p]);
    }
    return total;
  }
  Vector smoothed_argmax(const Vector& z, double mu) const override {
    return prox::project_pixel_disks(z / mu);
  }
  double dual_diameter_sq() const override {
    return static_cast<double>(pixels_);
  }

 private:
  Index pixels_;
};

}  // namespace

Vector image_gradient(const Vector& x, Index rows, Index cols) {
  require(x.size() == rows * cols, "gradient: size mismatch");
  Vector out;
  gradient_into(x, rows, cols, out);
  return out;
}

Vector image_divergence(const Vector& u, Index rows, Index cols) {
  require(u.size() == 2 * rows * cols, "divergence: size mismatch");
  Vector out;
  gradient_adjoint_into(u, rows, cols, out);
  return -out;
}

double image_gradient_norm_sq(Index rows, Index cols) {
  const auto term = [](Index k) {
    const double kd = static_cast<double>(k);
    return 2.0 - 2.0 * std::cos(std::numbers::pi * (kd - 1.0) / kd);
  };
  return term(rows) + term(cols);
}

CompositeProblem build_rof(const RofInstance& image) {
  const Index rows = image.rows;
  const Index cols = image.cols;
  require(rows > 0 && cols > 0, "ROF: empty image");
  require(image.noisy.size() == rows * cols, "ROF: pixel count mismatch");
  require(image.lambda > 0.0, "ROF: lambda must be positive");
  const Index n = rows * cols;
  auto map = LinearMap::structured(
      2 * n, n,
      [rows, cols](const Vector& x, Vector& out) {
        gradient_into(x, rows, cols, out);
      },
      [rows, cols](const Vector& u, Vector& out) {
        gradient_adjoint_into(u, rows, cols, out);
      },
      std::sqrt(image_gradient_norm_sq(rows, cols)));
  auto term = std::make_shared<QuadraticFidelityTerm>(image.lambda, image.noisy);
  auto dual = std::make_shared<QuadraticDualOracle>(image.lambda, image.noisy);
  return CompositeProblem("rof", std::move(map),
                          std::make_shared<PixelDiskMax>(n), term,
                          PrimalDomain::all(n), dual);
}

}  // namespace hops
