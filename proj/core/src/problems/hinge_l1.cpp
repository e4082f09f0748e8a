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

#include "hops/problems/hinge_l1.hpp"

#include <Eigen/QR>
#include <cmath>
#include <memory>
#include <vector>

#include "hops/problems/blocks.hpp"
#include "hops/prox.hpp"
#include "hops/terms.hpp"

namespace hops {

CompositeProblem build_hinge_l1(const HingeL1Instance& data,
                                const HingeL1Options& options) {
  const Index n = data.features.rows();
  const Index d = data.features.cols();
  require(n > 0 && d > 0, "hinge: empty data");
  require(data.labels.size() == n, "hinge: label count differs from rows");
  for (Index i = 0; i < n; ++i) {
    require(data.labels[i] == 1.0 || data.labels[i] == -1.0,
            "hinge: labels must be +1 or -1");
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  const double lambda = options.lambda.value_or(inv_n);
  require(lambda > 0.0, "hinge: lambda must be positive");

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(data.features.nonZeros()));
  for (Index i = 0; i < n; ++i) {
    const double scale = -inv_n * data.labels[i];
    for (SparseMatrix::InnerIterator it(data.features, i); it; ++it) {
      entries.emplace_back(i, it.col(), scale * it.value());
    }
  }
  SparseMatrix a(n, d);
  a.setFromTriplets(entries.begin(), entries.end());
  a.makeCompressed();

  auto max = std::make_shared<BoxLinearMax>(0.0, 1.0,
                                            Vector::Constant(n, -inv_n));
  auto term = std::make_shared<L1Term>(lambda);
  const double radius = options.dual_radius.value_or(1.0 / lambda);
  auto dual = std::make_shared<NormBallDualOracle>(
      [lambda](const Vector& w) { return prox::soft_threshold(w, lambda); },
      radius);
  auto restore = std::make_shared<ScalingFeasibilityMap>(
      [lambda](const Vector& w) {
        const double top = w.cwiseAbs().maxCoeff();
        return top > lambda ? lambda / top : 1.0;
      });
  return CompositeProblem("hinge_l1", LinearMap::sparse(std::move(a)), max,
                          term, PrimalDomain::all(d), dual, restore);
}

std::vector<HingeL1Vertex> hinge_l1_crossover(const HingeL1Instance& data,
                                              double lambda, const Vector& x) {
  const Index n = data.features.rows();
  const Index d = data.features.cols();
  require(x.size() == d, "hinge crossover: dimension mismatch");
  const double inv_n = 1.0 / static_cast<double>(n);
  const Vector margin = data.labels.cwiseProduct(data.features * x);

  std::vector<HingeL1Vertex> out;
  for (const double tol : {1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
    std::vector<Index> support;
    std::vector<Index> col_of(static_cast<std::size_t>(d), -1);
    for (Index j = 0; j < d; ++j) {
      if (std::abs(x[j]) > tol) {
        col_of[static_cast<std::size_t>(j)] = static_cast<Index>(support.size());
        support.push_back(j);
      }
    }
    std::vector<Index> tight;
    Vector loss_side = Vector::Zero(static_cast<Index>(support.size()));
    for (Index i = 0; i < n; ++i) {
      if (std::abs(margin[i] - 1.0) <= tol) {
        tight.push_back(i);
      } else if (margin[i] < 1.0) {
        for (SparseMatrix::InnerIterator it(data.features, i); it; ++it) {
          const Index c = col_of[static_cast<std::size_t>(it.col())];
          if (c >= 0) loss_side[c] += inv_n * data.labels[i] * it.value();
        }
      }
    }
    if (support.empty() || tight.empty()) continue;

    // Rows y_i a_i restricted to the support, one per margin sample.
    Matrix b = Matrix::Zero(static_cast<Index>(tight.size()),
                            static_cast<Index>(support.size()));
    for (std::size_t r = 0; r < tight.size(); ++r) {
      const Index i = tight[r];
      for (SparseMatrix::InnerIterator it(data.features, i); it; ++it) {
        const Index c = col_of[static_cast<std::size_t>(it.col())];
        if (c >= 0) b(static_cast<Index>(r), c) = data.labels[i] * it.value();
      }
    }

    HingeL1Vertex v{Vector::Zero(d), Vector::Zero(n)};
    const Eigen::CompleteOrthogonalDecomposition<Matrix> primal(b);
    const Vector xs = primal.solve(Vector::Ones(b.rows()));
    for (std::size_t c = 0; c < support.size(); ++c) {
      v.x[support[c]] = xs[static_cast<Index>(c)];
    }

    // Stationarity on the support: (1/n) sum_i u_i y_i a_ij = lambda sign(x_j).
    Vector rhs(static_cast<Index>(support.size()));
    for (std::size_t c = 0; c < support.size(); ++c) {
      rhs[static_cast<Index>(c)] =
          lambda * (x[support[c]] > 0.0 ? 1.0 : -1.0) - loss_side[static_cast<Index>(c)];
    }
    const Eigen::CompleteOrthogonalDecomposition<Matrix> dual(inv_n * b.transpose());
    const Vector ut = dual.solve(rhs).cwiseMax(0.0).cwiseMin(1.0);
    for (Index i = 0; i < n; ++i) {
      if (margin[i] < 1.0 - tol) v.u[i] = 1.0;
    }
    for (std::size_t r = 0; r < tight.size(); ++r) {
      v.u[tight[r]] = ut[static_cast<Index>(r)];
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hops
