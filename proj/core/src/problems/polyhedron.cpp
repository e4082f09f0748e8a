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

#include "hops/problems/polyhedron.hpp"

#include <memory>
#include <random>

#include "hops/problems/blocks.hpp"
#include "hops/terms.hpp"

namespace hops {

CompositeProblem build_polyhedron(const PolyhedronInstance& data,
                                  const PolyhedronOptions& options) {
  const Index n1 = data.b1.rows();
  const Index n2 = data.b2.rows();
  const Index d = n1 > 0 ? data.b1.cols() : data.b2.cols();
  require(n1 + n2 > 0 && d > 0, "polyhedron: no constraints");
  require(n1 == 0 || data.b1.cols() == d, "polyhedron: column mismatch");
  require(n2 == 0 || data.b2.cols() == d, "polyhedron: column mismatch");
  require(data.c1.size() == n1 && data.c2.size() == n2,
          "polyhedron: right-hand side size mismatch");

  Matrix a(n1 + n2, d);
  if (n1 > 0) a.topRows(n1) = data.b1;
  if (n2 > 0) a.bottomRows(n2) = data.b2;
  Vector p(n1 + n2);
  p << data.c1, data.c2;

  double radius = kInf;
  if (options.dual_radius) {
    radius = *options.dual_radius;
  } else if (data.witness) {
    radius = 2.0 * data.witness->norm() + 1.0;
  }
  auto dual = std::make_shared<NormBallDualOracle>(
      [](const Vector& w) { return w; }, radius);
  return CompositeProblem("polyhedron", LinearMap::dense(std::move(a)),
                          std::make_shared<OrthantBallMax>(n1, std::move(p)),
                          std::make_shared<ZeroTerm>(), PrimalDomain::all(d),
                          dual);
}

PolyhedronInstance generate_polyhedron(Index dim, Index inequalities,
                                       Index equalities, std::uint64_t seed) {
  require(dim > 0 && inequalities >= 0 && equalities >= 0,
          "polyhedron generator: bad sizes");
  require(inequalities + equalities > 0, "polyhedron generator: no rows");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const auto gaussian = [&](Index r, Index c) {
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < c; ++j) m(i, j) = normal(rng);
    }
    return m;
  };
  PolyhedronInstance out;
  Vector witness(dim);
  for (Index j = 0; j < dim; ++j) witness[j] = normal(rng);
  out.b1 = gaussian(inequalities, dim);
  out.c1 = out.b1 * witness;
  for (Index i = inequalities / 2; i < inequalities; ++i) {
    out.c1[i] += uniform(rng);
  }
  out.b2 = gaussian(equalities, dim);
  out.c2 = out.b2 * witness;
  out.witness = std::move(witness);
  return out;
}

}  // namespace hops
