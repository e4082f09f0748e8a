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

#include "hops/problems/matrix_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/QR>

#include "hops/problems/blocks.hpp"
#include "hops/prox.hpp"
#include "hops/terms.hpp"

namespace hops {

double default_matrix_lambda(Index rows, Index cols) {
  return 1.0 / std::sqrt(static_cast<double>(std::max(rows, cols)));
}

CompositeProblem build_matrix_decomp(const MatrixDecompInstance& data,
                                     const MatrixDecompOptions& options) {
  const Index rows = data.observed.rows();
  const Index cols = data.observed.cols();
  require(rows >= 1 && cols >= 1, "matrix decomposition: empty matrix");
  const double lambda =
      options.lambda.value_or(default_matrix_lambda(rows, cols));
  require(lambda > 0.0, "matrix decomposition: lambda must be positive");
  const Index n = rows * cols;
  const Vector o = Eigen::Map<const Vector>(data.observed.data(), n);

  auto map = LinearMap::structured(
      n, n, [lambda](const Vector& x, Vector& out) { out = -lambda * x; },
      [lambda](const Vector& u, Vector& out) { out = -lambda * u; }, lambda);
  auto max = std::make_shared<BoxLinearMax>(-1.0, 1.0, -lambda * o);
  auto term = std::make_shared<NuclearNormTerm>(rows, cols);
  const double radius = options.dual_radius.value_or(lambda * o.lpNorm<1>());
  std::shared_ptr<const DualMinOracle> dual;
  if (radius > 0.0) {
    dual = std::make_shared<NormBallDualOracle>(
        [rows, cols](const Vector& w) {
          return prox::singular_value_threshold(w, rows, cols, 1.0);
        },
        radius);
  }
  auto restore = std::make_shared<ScalingFeasibilityMap>(
      [rows, cols](const Vector& w) {
        const double top = prox::spectral_norm(w, rows, cols);
        return top > 1.0 ? 1.0 / top : 1.0;
      });
  return CompositeProblem("matrix_decomp", std::move(map), max, term,
                          PrimalDomain::all(n), dual, restore);
}

MatrixDecompInstance generate_synthetic_lowrank(Index rows, Index cols,
                                                Index rank,
                                                double corruption_fraction,
                                                double noise_sd,
                                                std::uint64_t seed) {
  require(rows >= 1 && cols >= 1, "lowrank: empty shape");
  require(rank >= 1 && rank <= std::min(rows, cols), "lowrank: bad rank");
  require(corruption_fraction >= 0.0 && corruption_fraction <= 1.0,
          "lowrank: corruption fraction outside [0, 1]");
  require(noise_sd >= 0.0, "lowrank: noise_sd must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto gaussian = [&](Index r, Index c) {
    Matrix m(r, c);
    for (Index j = 0; j < c; ++j) {
      for (Index i = 0; i < r; ++i) m(i, j) = normal(rng);
    }
    return m;
  };
  const auto orthonormal = [&](Index r) {
    Eigen::HouseholderQR<Matrix> qr(gaussian(r, rank));
    return Matrix(qr.householderQ() * Matrix::Identity(r, rank));
  };
  const Matrix s1 = orthonormal(rows);
  const Matrix s2 = orthonormal(cols);
  MatrixDecompInstance out;
  const Matrix truth = s1 * s2.transpose();

  const Index total = rows * cols;
  const auto count = static_cast<Index>(
      std::floor(corruption_fraction * static_cast<double>(total)));
  std::vector<Index> order(static_cast<std::size_t>(total));
  std::iota(order.begin(), order.end(), Index{0});
  for (Index k = 0; k < count; ++k) {
    std::uniform_int_distribution<Index> pick(k, total - 1);
    std::swap(order[static_cast<std::size_t>(k)],
              order[static_cast<std::size_t>(pick(rng))]);
  }
  Matrix corruption = Matrix::Zero(rows, cols);
  for (Index k = 0; k < count; ++k) {
    corruption.data()[order[static_cast<std::size_t>(k)]] =
        noise_sd * normal(rng);
  }
  out.observed = truth + corruption;
  out.low_rank_truth = truth;
  out.corruption_truth = std::move(corruption);
  return out;
}

}  // namespace hops
