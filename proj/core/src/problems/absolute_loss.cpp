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

#include "hops/problems/absolute_loss.hpp"

#include <memory>

#include "hops/problems/blocks.hpp"
#include "hops/terms.hpp"

namespace hops {

CompositeProblem build_absolute_loss(Matrix a, Vector y,
                                     const AbsoluteLossOptions& options) {
  require(a.rows() > 0 && a.cols() > 0, "absolute loss: empty matrix");
  require(y.size() == a.rows(), "absolute loss: target size mismatch");
  const Index d = a.cols();
  auto dual = std::make_shared<NormBallDualOracle>(
      [](const Vector& w) { return w; }, options.dual_radius.value_or(kInf));
  return CompositeProblem("absolute_loss", LinearMap::dense(std::move(a)),
                          std::make_shared<BoxLinearMax>(-1.0, 1.0, std::move(y)),
                          std::make_shared<ZeroTerm>(), PrimalDomain::all(d),
                          dual);
}

}  // namespace hops
