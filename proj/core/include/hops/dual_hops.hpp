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

// Accelerated maximization of Phi_eta(u) = -phi(u) + psi_eta(u) over Omega2
// and its homotopy wrapper. Internally the stepper minimizes -psi_eta + phi,
// so the accumulated gradient is V_k = V_{k-1} - grad psi_eta(w_k) / alpha_k.

#pragma once

#include <cstdint>
#include <vector>

#include "hops/apg.hpp"
#include "hops/hops.hpp"

namespace hops {

struct DualStageSchedule {
  double eps0 = 1.0;
  double eps = 1e-3;
  double b = 2.0;
  std::int64_t t = 0;
  std::vector<std::int64_t> per_stage;
  /// May be 0 when psi is exactly smooth (then every stage uses eta = 0).
  double eta1 = 0.0;

  /// eta1 = eps0 / (b D~^2); eta1 = 0 when D~^2 is infinite.
  static DualStageSchedule make(double eps0, double eps, double b,
                                std::int64_t t, double d_tilde_sq);

  int stages() const { return stage_count(eps0, eps, b); }
  double eta(int s) const;
  std::int64_t budget(int s) const;
  void validate() const;
};

/// -psi_eta as the smooth part, phi over Omega2 through its composite prox.
CompositeModel make_dual_model(const CompositeProblem& problem, double eta);

struct DualSolveResult {
  Vector u;
  SolveTrace trace;
  std::vector<StageInfo> stages;  // empty for a single dapg_solve
};

/// Trace records carry Phi(u_k) in the dual column and F(x_eta(u_k)) as the
/// primal value. config.sigma1 plays the role of sigma2.
DualSolveResult dapg_solve(const CompositeProblem& problem, const Vector& u0,
                           std::int64_t t, double eta,
                           const ApgConfig& config = {},
                           const StopRule& stop = {});

DualSolveResult dual_hops_solve(const CompositeProblem& problem,
                                const Vector& u0,
                                const DualStageSchedule& schedule,
                                const ApgConfig& config = {},
                                const StopRule& stop = {});

}  // namespace hops
