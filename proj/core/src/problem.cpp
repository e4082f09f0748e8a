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

#include "hops/problem.hpp"

#include <cmath>
#include <string>

#include "hops/prox.hpp"
#include "hops/terms.hpp"

namespace hops {

Vector SimpleTerm::prox(double, const Vector&, double, const Vector&) const {
  throw UnsupportedOperation("simple term has no proximal oracle");
}

Vector SimpleTerm::gradient(const Vector&) const {
  throw UnsupportedOperation("simple term is not smooth");
}

double SimpleTerm::smoothness() const {
  throw UnsupportedOperation("simple term is not smooth");
}

Vector PrimalDomain::project(const Vector& x) const {
  switch (kind) {
    case DomainKind::kAll:
      return x;
    case DomainKind::kBox:
      return prox::clamp(x, lower, upper);
    case DomainKind::kBall:
      return prox::project_ball(x, radius);
  }
  return x;
}

CompositeProblem::CompositeProblem(
    std::string name, LinearMap map,
    std::shared_ptr<const MaxStructure> max_structure,
    std::shared_ptr<const SimpleTerm> simple_term, PrimalDomain domain,
    std::shared_ptr<const DualMinOracle> dual,
    std::shared_ptr<const DualFeasibilityMap> restore)
    : name_(std::move(name)),
      map_(std::move(map)),
      max_(std::move(max_structure)),
      term_(std::move(simple_term)),
      domain_(domain),
      dual_(std::move(dual)),
      restore_(std::move(restore)) {
  require(max_ != nullptr, "CompositeProblem: missing max-structure");
  require(term_ != nullptr, "CompositeProblem: missing simple term");
  require(max_->dim() == map_.rows(),
          "CompositeProblem: Omega2 dimension differs from rows(A)");
  require(domain_.dim == map_.cols(),
          "CompositeProblem: Omega1 dimension differs from cols(A)");
  if (const auto exact = map_.exact_norm()) {
    op_norm_ = *exact;
  } else {
    op_norm_ = operator_norm(map_, 1e-12, 20000, 0).value;
  }
}

const DualMinOracle& CompositeProblem::dual() const {
  if (!dual_) {
    throw UnsupportedOperation("problem '" + name_ +
                               "' has no dual minimization oracle");
  }
  return *dual_;
}

double evaluate_primal(const CompositeProblem& problem, const Vector& x) {
  if (x.size() != problem.primal_dim()) {
    throw InputError("evaluate_primal: expected length " +
                     std::to_string(problem.primal_dim()) + ", got " +
                     std::to_string(x.size()));
  }
  return problem.max_structure().max_value(problem.map().forward(x)) +
         problem.simple_term().value(x);
}

namespace {

Vector admit_dual_point(const CompositeProblem& problem, const Vector& u) {
  if (u.size() != problem.dual_dim()) {
    throw InputError("dual point: expected length " +
                     std::to_string(problem.dual_dim()) + ", got " +
                     std::to_string(u.size()));
  }
  Vector p = problem.max_structure().project(u);
  if ((p - u).norm() > kDomainTolerance) {
    throw InputError("dual point lies outside Omega2");
  }
  return p;
}

}  // namespace

double evaluate_dual(const CompositeProblem& problem, const Vector& u) {
  const DualMinOracle& dual = problem.dual();
  const Vector p = admit_dual_point(problem, u);
  const double psi = dual.psi(problem.map().adjoint(p));
  if (psi == -kInf) return -kInf;
  return -problem.max_structure().phi(p) + psi;
}

DualCertificate certify_dual(const CompositeProblem& problem, const Vector& u) {
  DualCertificate best{evaluate_dual(problem, u), u};
  if (const auto* fm = problem.feasibility_map()) {
    const Vector p = problem.max_structure().project(u);
    Vector r = fm->restore(p, problem.map().adjoint(p));
    const double value = evaluate_dual(problem, r);
    if (value > best.value) best = {value, std::move(r)};
  }
  return best;
}

Vector composite_prox(double c, const Vector& v, double weight,
                      const SimpleTerm& term, const PrimalDomain& domain,
                      const Vector& x) {
  if (!(c > 0.0)) throw InputError("composite_prox: c must be positive");
  if (v.size() != x.size() || x.size() != domain.dim) {
    throw InputError("composite_prox: dimension mismatch");
  }
  if (weight == 0.0 || dynamic_cast<const ZeroTerm*>(&term) != nullptr) {
    return projected_step(c, v, domain, x);
  }
  Vector z = term.prox(c, v, weight, x);
  switch (domain.kind) {
    case DomainKind::kAll:
      return z;
    case DomainKind::kBox:
      if (!term.separable()) {
        throw UnsupportedOperation(
            "composite_prox: box domain needs a separable term");
      }
      return domain.project(z);
    case DomainKind::kBall:
      throw UnsupportedOperation(
          "composite_prox: ball-constrained prox of g is not available");
  }
  return z;
}

Vector projected_step(double c, const Vector& v, const PrimalDomain& domain,
                      const Vector& x) {
  if (!(c > 0.0)) throw InputError("projected_step: c must be positive");
  return domain.project(x - v / c);
}

double dual_diameter_sq(const CompositeProblem& problem) {
  return problem.max_structure().dual_diameter_sq();
}

}  // namespace hops
