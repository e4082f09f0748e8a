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

#include "hops/linear_map.hpp"

#include <cmath>
#include <random>
#include <string>

namespace hops {

LinearMap LinearMap::dense(Matrix matrix) {
  const Index rows = matrix.rows();
  const Index cols = matrix.cols();
  return LinearMap(rows, cols, std::move(matrix), std::nullopt);
}

LinearMap LinearMap::sparse(SparseMatrix matrix) {
  matrix.makeCompressed();
  const Index rows = matrix.rows();
  const Index cols = matrix.cols();
  return LinearMap(rows, cols, std::move(matrix), std::nullopt);
}

LinearMap LinearMap::structured(Index rows, Index cols, Apply forward,
                                Apply adjoint,
                                std::optional<double> exact_norm) {
  require(forward && adjoint, "structured map needs both callbacks");
  return LinearMap(rows, cols,
                   Callbacks{std::move(forward), std::move(adjoint)},
                   exact_norm);
}

Vector LinearMap::forward(const Vector& x) const {
  if (x.size() != cols_) {
    throw InputError("LinearMap::forward: expected length " +
                     std::to_string(cols_) + ", got " +
                     std::to_string(x.size()));
  }
  Vector out(rows_);
  if (const auto* m = std::get_if<Matrix>(&storage_)) {
    out.noalias() = *m * x;
  } else if (const auto* s = std::get_if<SparseMatrix>(&storage_)) {
    out.noalias() = *s * x;
  } else {
    std::get<Callbacks>(storage_).forward(x, out);
  }
  return out;
}

Vector LinearMap::adjoint(const Vector& u) const {
  if (u.size() != rows_) {
    throw InputError("LinearMap::adjoint: expected length " +
                     std::to_string(rows_) + ", got " +
                     std::to_string(u.size()));
  }
  Vector out(cols_);
  if (const auto* m = std::get_if<Matrix>(&storage_)) {
    out.noalias() = m->transpose() * u;
  } else if (const auto* s = std::get_if<SparseMatrix>(&storage_)) {
    out.noalias() = s->transpose() * u;
  } else {
    std::get<Callbacks>(storage_).adjoint(u, out);
  }
  return out;
}

OperatorNormEstimate operator_norm(const LinearMap& map, double tol,
                                   int max_iter, std::uint64_t seed) {
  require(tol > 0.0, "operator_norm: tol must be positive");
  require(max_iter >= 1, "operator_norm: max_iter must be >= 1");
  OperatorNormEstimate est;
  if (map.rows() == 0 || map.cols() == 0) {
    est.converged = true;
    return est;
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(map.cols());
  for (Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
  v.normalize();

  double previous = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    const Vector av = map.forward(v);
    const double sigma = av.norm();
    est.iterations = it;
    est.value = std::max(est.value, sigma);
    if (sigma == 0.0) {
      // v landed in the null space; A may still be nonzero elsewhere.
      if (it == 1) {
        for (Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
        v.normalize();
        continue;
      }
      est.converged = true;
      return est;
    }
    Vector w = map.adjoint(av);
    const double wn = w.norm();
    if (wn == 0.0) {
      est.converged = true;
      return est;
    }
    v = w / wn;
    if (it > 1 && std::abs(sigma - previous) < tol * sigma) {
      est.converged = true;
      return est;
    }
    previous = sigma;
  }
  return est;
}

}  // namespace hops
