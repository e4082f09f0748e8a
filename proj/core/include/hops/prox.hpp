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

// Closed-form proximal and projection primitives.

#pragma once

#include "hops/types.hpp"

namespace hops::prox {

/// sign(x) * max(|x| - level, 0), elementwise.
Vector soft_threshold(const Vector& x, double level);

/// Singular-value soft-thresholding of the rows x cols matrix stored
/// column-major in x.
Vector singular_value_threshold(const Vector& x, Index rows, Index cols,
                                double level);

/// Sum of singular values of the column-major rows x cols matrix in x.
double nuclear_norm(const Vector& x, Index rows, Index cols);

/// Largest singular value.
double spectral_norm(const Vector& x, Index rows, Index cols);

Vector clamp(const Vector& x, double lo, double hi);

/// Projection onto {||u|| <= radius}.
Vector project_ball(const Vector& u, double radius = 1.0);

/// Projection onto {u >= 0, ||u|| <= radius}: clip to the orthant, then
/// scale into the ball (exact for a cone intersected with a centered ball).
Vector project_nonneg_ball(const Vector& u, double radius = 1.0);

/// u = [u1; u2] with pixel i owning the pair (u1_i, u2_i). Each pair is
/// projected onto the unit disk.
Vector project_pixel_disks(const Vector& u);

}  // namespace hops::prox
