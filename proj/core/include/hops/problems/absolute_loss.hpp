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

// Least absolute deviations, F(x) = ||Ax - y||_1, as
// max_{|u_i| <= 1} <Ax, u> - <y, u>. A small sanity instance with g = 0.

#pragma once

#include <optional>

#include "hops/problem.hpp"

namespace hops {

struct AbsoluteLossOptions {
  /// Ball for the dual oracle; unrestricted when absent.
  std::optional<double> dual_radius;
};

CompositeProblem build_absolute_loss(Matrix a, Vector y,
                                     const AbsoluteLossOptions& options = {});

}  // namespace hops
