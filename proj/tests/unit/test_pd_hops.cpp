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

#include <gtest/gtest.h>

#include "hops/pd_hops.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace {

using hops::Vector;

TEST(DualityGap, HingeAtZeroPair) {
  // Every margin is 0 at x = 0, so the mean hinge loss is exactly 1.
  const auto p = fixtures::small_hinge();
  EXPECT_DOUBLE_EQ(hops::duality_gap(p, Vector::Zero(p.primal_dim()),
                                     Vector::Zero(p.dual_dim())),
                   1.0);
}

TEST(DualityGap, OptimalPairIsZero) {
  const auto p = fixtures::absolute_value();
  EXPECT_NEAR(hops::duality_gap(p, Vector::Zero(1), Vector::Zero(1)), 0.0, 1e-9);
}

TEST(DualityGap, InfiniteWhenDualIsMinusInfinity) {
  const auto p = fixtures::absolute_value();  // unrestricted inner minimum
  EXPECT_EQ(hops::duality_gap(p, Vector::Zero(1), Vector::Constant(1, 0.5)), hops::kInf);
}

TEST(DualityGap, NonNegativeOnFeasiblePairs) {
  std::mt19937_64 rng(5);
  for (const auto& [name, p] : fixtures::four_instances()) {
    for (int k = 0; k < 20; ++k) {
      const Vector x = oracle::random_vector(rng, p.primal_dim());
      const Vector u = fixtures::random_dual_point(p, rng);
      EXPECT_GE(hops::duality_gap(p, x, u), -1e-9) << name;
    }
  }
}

TEST(PdHopsSolve, OptimalStartBreaksAtFirstCheck) {
  const auto p = hops::build_absolute_loss(hops::Matrix::Ones(1, 1), Vector::Zero(1),
                                           {.dual_radius = 5.0});
  hops::PdHopsConfig cfg;
  cfg.eps0 = 1.0;
  cfg.eps = 1e-3;
  const auto res = hops::pd_hops_solve(p, Vector::Zero(1), Vector::Zero(1), cfg);
  ASSERT_FALSE(res.stages.empty());
  EXPECT_EQ(res.stages.front().primal_iterations, cfg.check_every);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.final_gap, 0.0, 1e-12);
}

TEST(PdHopsSolve, CertificateOnSmallInstances) {
  for (const auto& [name, p] : fixtures::four_instances()) {
    for (double eps : {1e-2, 1e-3}) {
      hops::PdHopsConfig cfg;
      cfg.eps = eps;
      const auto res = hops::pd_hops_solve(p, Vector::Zero(p.primal_dim()),
                                           Vector::Zero(p.dual_dim()), cfg);
      EXPECT_TRUE(res.converged) << name << ' ' << eps;
      const double gap = hops::evaluate_primal(p, res.x) - hops::evaluate_dual(p, res.u);
      EXPECT_LE(gap, 4.0 * eps) << name << ' ' << eps;
      EXPECT_NEAR(gap, res.final_gap, 1e-12) << name;
    }
  }
}

TEST(PdHopsSolve, StageBreaksMeetTheirThresholds) {
  const auto p = fixtures::small_polyhedron();
  hops::PdHopsConfig cfg;
  cfg.eps = 1e-4;
  cfg.b = 3.0;
  const auto res = hops::pd_hops_solve(p, Vector::Zero(p.primal_dim()),
                                       Vector::Zero(p.dual_dim()), cfg);
  ASSERT_TRUE(res.converged);
  for (std::size_t s = 0; s < res.stages.size(); ++s) {
    const auto& st = res.stages[s];
    EXPECT_TRUE(st.certified);
    EXPECT_LE(st.gap, 2.0 * (st.eps_s + cfg.eps));
    if (s > 0) {
      EXPECT_DOUBLE_EQ(st.eps_s, res.stages[s - 1].eps_s / 3.0);
      EXPECT_DOUBLE_EQ(st.mu, res.stages[s - 1].mu / 3.0);
      EXPECT_DOUBLE_EQ(st.eta, res.stages[s - 1].eta / 3.0);
    }
  }
}

TEST(PdHopsSolve, ConcurrentMatchesSequential) {
  const auto p = fixtures::small_matrix();
  hops::PdHopsConfig cfg;
  cfg.eps = 1e-3;
  const Vector x0 = Vector::Zero(p.primal_dim());
  const Vector u0 = Vector::Zero(p.dual_dim());
  const auto a = hops::pd_hops_solve(p, x0, u0, cfg);
  cfg.concurrent = true;
  const auto b = hops::pd_hops_solve(p, x0, u0, cfg);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.u, b.u);
  EXPECT_EQ(a.trace.records, b.trace.records);
  EXPECT_EQ(a.primal_iterations, b.primal_iterations);
}

TEST(PdHopsSolve, CountsPrimalUpdatesOnly) {
  const auto p = fixtures::small_hinge();
  hops::PdHopsConfig cfg;
  cfg.eps = 1e-3;
  cfg.dual_per_primal = 3;
  const auto res = hops::pd_hops_solve(p, Vector::Zero(p.primal_dim()),
                                       Vector::Zero(p.dual_dim()), cfg);
  std::int64_t total = 0;
  for (const auto& s : res.stages) total += s.primal_iterations;
  EXPECT_EQ(res.primal_iterations, total);
  EXPECT_EQ(res.trace.iterations, total);
}

TEST(PdHopsSolve, StageCapReportsNonConvergence) {
  const auto p = fixtures::small_hinge();
  hops::PdHopsConfig cfg;
  cfg.eps = 1e-8;
  cfg.max_iters_per_stage = 20;
  const auto res = hops::pd_hops_solve(p, Vector::Zero(p.primal_dim()),
                                       Vector::Zero(p.dual_dim()), cfg);
  EXPECT_FALSE(res.converged);
}

TEST(PdHopsSolve, RejectsBadConfig) {
  const auto p = fixtures::small_hinge();
  const Vector x0 = Vector::Zero(p.primal_dim());
  const Vector u0 = Vector::Zero(p.dual_dim());
  hops::PdHopsConfig cfg;
  cfg.b = 1.0;
  EXPECT_THROW(hops::pd_hops_solve(p, x0, u0, cfg), hops::InputError);
  cfg.b = 2.0;
  cfg.check_every = 0;
  EXPECT_THROW(hops::pd_hops_solve(p, x0, u0, cfg), hops::InputError);
}

TEST(PdHopsSolve, InfiniteInitialGapNeedsExplicitEps0) {
  const auto p = fixtures::absolute_value();
  hops::PdHopsConfig cfg;
  EXPECT_THROW(hops::pd_hops_solve(p, Vector::Zero(1), Vector::Constant(1, 0.5), cfg),
               hops::InputError);
}

}  // namespace
