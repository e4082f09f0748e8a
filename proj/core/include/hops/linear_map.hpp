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

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "hops/types.hpp"

namespace hops {

/// The linear operator A : R^d -> R^m of the max-structure.
///
/// Three storage forms are supported: a dense matrix, a row-major sparse
/// matrix, and a matrix-free operator given as a forward/adjoint callback
/// pair (the discrete gradient, scaled identities). A structured operator may
/// carry its exact spectral norm when it is known in closed form.
class LinearMap {
 public:
  using Apply = std::function<void(const Vector& in, Vector& out)>;

  static LinearMap dense(Matrix matrix);
  static LinearMap sparse(SparseMatrix matrix);
  static LinearMap structured(Index rows, Index cols, Apply forward,
                              Apply adjoint,
                              std::optional<double> exact_norm = std::nullopt);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }

  /// A x; x must have length cols().
  Vector forward(const Vector& x) const;
  /// A^T u; u must have length rows().
  Vector adjoint(const Vector& u) const;

  /// Closed-form ||A|| when the operator knows it.
  std::optional<double> exact_norm() const noexcept { return exact_norm_; }

  bool is_dense() const noexcept {
    return std::holds_alternative<Matrix>(storage_);
  }
  bool is_sparse() const noexcept {
    return std::holds_alternative<SparseMatrix>(storage_);
  }

 private:
  struct Callbacks {
    Apply forward;
    Apply adjoint;
  };

  LinearMap(Index rows, Index cols,
            std::variant<Matrix, SparseMatrix, Callbacks> storage,
            std::optional<double> exact_norm)
      : rows_(rows),
        cols_(cols),
        storage_(std::move(storage)),
        exact_norm_(exact_norm) {}

  Index rows_;
  Index cols_;
  std::variant<Matrix, SparseMatrix, Callbacks> storage_;
  std::optional<double> exact_norm_;
};

struct OperatorNormEstimate {
  double value = 0.0;
  int iterations = 0;
  // False when max_iter was reached before the relative change fell below
  // tol; value is then the best estimate seen.
  bool converged = false;
};

/// Largest singular value of `map` by power iteration on A^T A, started from
/// a seeded Gaussian vector. Deterministic for a fixed seed.
OperatorNormEstimate operator_norm(const LinearMap& map, double tol = 1e-10,
                                   int max_iter = 10000,
                                   std::uint64_t seed = 0);

}  // namespace hops
