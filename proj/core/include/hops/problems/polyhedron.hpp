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

// Finding a point in {x : B1 x <= b1, B2 x = b2} by minimizing
//
//   F(x) = ||(B1 x - b1)_+|| + ||B2 x - b2||
//        = max_{u1 >= 0, ||u1|| <= 1, ||u2|| <= 1} <Bx, u> - <b, u>.
//
// F_* = 0 for feasible instances.

#pragma once

#include <cstdint>
#include <optional>

#include "hops/problem.hpp"

namespace hops {

struct PolyhedronInstance {
  Matrix b1;  // inequality rows
  Vector c1;  // right-hand side b1
  Matrix b2;  // equality rows
  Vector c2;  // right-hand side b2
  std::optional<Vector> witness;  // a feasible point, when known
};

struct PolyhedronOptions {
  /// Ball the dual oracle minimizes over. Defaults to 2 ||witness|| + 1 when
  /// a witness is known, else unrestricted.
  std::optional<double> dual_radius;
};

CompositeProblem build_polyhedron(const PolyhedronInstance& data,
                                  const PolyhedronOptions& options = {});

/// Gaussian rows around a Gaussian witness. Half of the inequalities are
/// tight at the witness, the rest have slack drawn from U(0, 1).
PolyhedronInstance generate_polyhedron(Index dim, Index inequalities,
                                       Index equalities, std::uint64_t seed);

}  // namespace hops
