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

// ROF total-variation denoising,
//
//   min_x ||grad x||_{1,2} + (lambda/2) ||x - h||^2,
//
// with f(x) = max_{u in per-pixel unit disks} <grad x, u> and g the
// fidelity term. Images are stored row-major: pixel (i, j) at i * cols + j.

#pragma once

#include "hops/problem.hpp"

namespace hops {

struct RofInstance {
  Index rows = 0;
  Index cols = 0;
  Vector noisy;  // h, row-major
  double lambda = 20.0;
};

/// Forward differences with the last row (vertical) and last column
/// (horizontal) set to zero. Output is [vertical; horizontal].
Vector image_gradient(const Vector& x, Index rows, Index cols);

/// div = -grad^T.
Vector image_divergence(const Vector& u, Index rows, Index cols);

/// ||grad||^2 = (2 - 2 cos(pi (rows-1)/rows)) + (2 - 2 cos(pi (cols-1)/cols)).
double image_gradient_norm_sq(Index rows, Index cols);

CompositeProblem build_rof(const RofInstance& image);

}  // namespace hops
