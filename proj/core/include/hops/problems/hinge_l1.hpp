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

// l1-regularized hinge loss,
//
//   min_x (1/n) sum_i max(0, 1 - y_i a_i^T x) + lambda ||x||_1,
//
// as a max-structure with A = -(1/n) diag(y) X, Omega2 = [0, 1]^n and
// phi(u) = -1^T u / n.

#pragma once

#include <optional>
#include <vector>

#include "hops/problem.hpp"

namespace hops {

struct HingeL1Instance {
  SparseMatrix features;  // n x d
  Vector labels;          // +-1
};

struct HingeL1Options {
  /// Defaults to 1/n.
  std::optional<double> lambda;
  /// Radius of the ball the dual oracle minimizes over. Defaults to
  /// F(0) / lambda = 1 / lambda, which contains every minimizer.
  std::optional<double> dual_radius;
};

/// Throws InputError on empty data, size mismatch or labels outside {-1, +1}.
CompositeProblem build_hinge_l1(const HingeL1Instance& data,
                                const HingeL1Options& options = {});

struct HingeL1Vertex {
  Vector x;
  Vector u;
};

/// Active-set crossover for this linear program. From an approximate
/// minimizer x, guesses the support of x and the samples sitting on the
/// margin (one guess per tolerance), then solves for the vertex and the
/// multipliers those sets determine. Candidates are neither checked nor
/// ranked; callers keep whichever certifies best.
std::vector<HingeL1Vertex> hinge_l1_crossover(const HingeL1Instance& data,
                                              double lambda, const Vector& x);

}  // namespace hops
