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

// Nuclear-norm regularized absolute error,
//
//   min_X lambda ||O - X||_1 + ||X||_*,
//
// written as max_{|U_ij| <= 1} -lambda <X, U> + lambda <O, U>. Matrices are
// vectorized column-major.

#pragma once

#include <cstdint>
#include <optional>

#include "hops/problem.hpp"

namespace hops {

struct MatrixDecompInstance {
  Matrix observed;  // O
  std::optional<Matrix> low_rank_truth;
  std::optional<Matrix> corruption_truth;
};

struct MatrixDecompOptions {
  /// Defaults to max(rows, cols)^(-1/2).
  std::optional<double> lambda;
  /// Defaults to F(0) = lambda ||O||_1, which bounds ||X*||_F.
  std::optional<double> dual_radius;
};

CompositeProblem build_matrix_decomp(const MatrixDecompInstance& data,
                                     const MatrixDecompOptions& options = {});

double default_matrix_lambda(Index rows, Index cols);

/// X_true = S1 S2^T with orthonormal rank-k factors (QR of seeded Gaussian
/// matrices); floor(corruption_fraction * m n) distinct entries receive
/// N(0, noise_sd^2) noise.
MatrixDecompInstance generate_synthetic_lowrank(Index rows, Index cols,
                                                Index rank,
                                                double corruption_fraction,
                                                double noise_sd,
                                                std::uint64_t seed);

}  // namespace hops
