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

// Problem model for
//
//   min_{x in Omega1} F(x) = f(x) + g(x),
//   f(x) = max_{u in Omega2} <Ax, u> - phi(u),
//
// and its dual
//
//   max_{u in Omega2} Phi(u) = -phi(u) + psi(u),
//   psi(u) = min_{x in Omega1} <A^T u, x> + g(x).
//
// Every solver in the library consumes a CompositeProblem. The pieces are
// immutable once built and may be shared between concurrent solves.

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hops/linear_map.hpp"
#include "hops/types.hpp"

namespace hops {

/// Omega2, phi and the prox function omega_plus of the max-structure.
class MaxStructure {
 public:
  virtual ~MaxStructure() = default;

  virtual Index dim() const = 0;

  /// Euclidean projection onto Omega2.
  virtual Vector project(const Vector& u) const = 0;

  virtual double phi(const Vector& u) const = 0;

  /// argmin_{z in Omega2} (c/2)||z - u||^2 + <v, z> + weight * phi(z).
  virtual Vector phi_prox(double c, const Vector& v, double weight,
                          const Vector& u) const = 0;

  /// max_{u in Omega2} <z, u> - phi(u), with z = Ax. Closed form.
  virtual double max_value(const Vector& z) const = 0;

  /// argmax_{u in Omega2} <z, u> - phi(u) - mu * omega_plus(u), z = Ax.
  virtual Vector smoothed_argmax(const Vector& z, double mu) const = 0;

  virtual double omega_plus(const Vector& u) const {
    return 0.5 * u.squaredNorm();
  }

  /// D^2 = 2 max_{u in Omega2} omega_plus(u).
  virtual double dual_diameter_sq() const = 0;
};

/// The simple term g. Prox-friendly terms expose composite_prox; smooth terms
/// expose a gradient and a smoothness constant M. A term may be both.
class SimpleTerm {
 public:
  virtual ~SimpleTerm() = default;

  virtual double value(const Vector& x) const = 0;

  virtual bool prox_friendly() const { return false; }
  /// argmin_z (c/2)||z - x||^2 + <v, z> + weight * g(z) over all of R^d.
  virtual Vector prox(double c, const Vector& v, double weight,
                      const Vector& x) const;
  /// Coordinate-separable g: the box-constrained prox is a clamp of prox().
  virtual bool separable() const { return false; }

  virtual bool smooth() const { return false; }
  virtual Vector gradient(const Vector& x) const;
  virtual double smoothness() const;

  /// Modulus of strong convexity of g (0 when not strongly convex).
  virtual double strong_convexity() const { return 0.0; }
};

enum class DomainKind { kAll, kBox, kBall };

/// Omega1 for the primal updates.
struct PrimalDomain {
  Index dim = 0;
  DomainKind kind = DomainKind::kAll;
  double lower = -kInf;  // box
  double upper = kInf;   // box
  double radius = kInf;  // ball around 0

  static PrimalDomain all(Index d) { return {d, DomainKind::kAll}; }
  static PrimalDomain box(Index d, double lo, double hi) {
    return {d, DomainKind::kBox, lo, hi, kInf};
  }
  static PrimalDomain ball(Index d, double r) {
    return {d, DomainKind::kBall, -kInf, kInf, r};
  }

  Vector project(const Vector& x) const;
};

/// Exact inner minimization psi(u) = min_x <A^T u, x> + g(x) and its
/// smoothed counterpart with prox function omega. Oracles receive w = A^T u.
class DualMinOracle {
 public:
  virtual ~DualMinOracle() = default;

  /// psi as a function of w = A^T u; -inf when unbounded below.
  virtual double psi(const Vector& w) const = 0;

  /// x_eta = argmin_{x in Omega1} <w, x> + g(x) + eta * omega(x).
  virtual Vector smoothed_argmin(const Vector& w, double eta) const = 0;

  virtual double omega(const Vector& x) const = 0;

  /// D~^2 = 2 max omega over the dual-side Omega1; +inf when unbounded.
  virtual double primal_diameter_sq() const = 0;

  /// psi is already smooth (g strongly convex), so eta = 0 is admissible.
  virtual bool exactly_smooth() const { return false; }
};

/// Maps any u in Omega2 to a nearby u' in Omega2 with psi(u') > -inf. Used to
/// turn an infeasible dual iterate into a finite lower bound on F_*.
class DualFeasibilityMap {
 public:
  virtual ~DualFeasibilityMap() = default;
  virtual Vector restore(const Vector& u, const Vector& w) const = 0;
};

class CompositeProblem {
 public:
  CompositeProblem(std::string name, LinearMap map,
                   std::shared_ptr<const MaxStructure> max_structure,
                   std::shared_ptr<const SimpleTerm> simple_term,
                   PrimalDomain domain,
                   std::shared_ptr<const DualMinOracle> dual = nullptr,
                   std::shared_ptr<const DualFeasibilityMap> restore = nullptr);

  const std::string& name() const noexcept { return name_; }
  const LinearMap& map() const noexcept { return map_; }
  const MaxStructure& max_structure() const noexcept { return *max_; }
  const SimpleTerm& simple_term() const noexcept { return *term_; }
  const PrimalDomain& domain() const noexcept { return domain_; }

  bool has_dual() const noexcept { return dual_ != nullptr; }
  /// Throws UnsupportedOperation when the problem has no dual oracle.
  const DualMinOracle& dual() const;
  const DualFeasibilityMap* feasibility_map() const noexcept {
    return restore_.get();
  }

  Index primal_dim() const noexcept { return map_.cols(); }
  Index dual_dim() const noexcept { return map_.rows(); }

  /// ||A||: the operator's closed form when known, else a seeded power
  /// iteration computed once at construction.
  double op_norm() const noexcept { return op_norm_; }

 private:
  std::string name_;
  LinearMap map_;
  std::shared_ptr<const MaxStructure> max_;
  std::shared_ptr<const SimpleTerm> term_;
  PrimalDomain domain_;
  std::shared_ptr<const DualMinOracle> dual_;
  std::shared_ptr<const DualFeasibilityMap> restore_;
  double op_norm_ = 0.0;
};

/// F(x) = max_u <Ax, u> - phi(u) + g(x), using the closed-form inner max.
double evaluate_primal(const CompositeProblem& problem, const Vector& x);

/// Phi(u) = -phi(u) + psi(u); -inf when psi(u) = -inf. u is projected onto
/// Omega2 if it lies within kDomainTolerance of it, rejected otherwise.
double evaluate_dual(const CompositeProblem& problem, const Vector& u);

/// Best available finite lower bound on F_* from u: max of Phi(u) and
/// Phi(restore(u)). Returns the point that attains it.
struct DualCertificate {
  double value = -kInf;
  Vector point;
};
DualCertificate certify_dual(const CompositeProblem& problem, const Vector& u);

/// argmin_{z in Omega1} (c/2)||z - x||^2 + <v, z> + weight * g(z).
Vector composite_prox(double c, const Vector& v, double weight,
                      const SimpleTerm& term, const PrimalDomain& domain,
                      const Vector& x);

/// Projection step argmin_{z in Omega1} <v, z> + (c/2)||z - x||^2.
Vector projected_step(double c, const Vector& v, const PrimalDomain& domain,
                      const Vector& x);

double dual_diameter_sq(const CompositeProblem& problem);

}  // namespace hops
