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

#include <cmath>

#include "hops/baselines.hpp"
#include "instances.hpp"

namespace {

using hops::Vector;

hops::StopRule quiet() {
  hops::StopRule s;
  s.keep_records = false;
  return s;
}

TEST(ChambollePock, RofGapBelowOneEMinusEight) {
  const auto p = fixtures::small_rof(12, 12, 51);
  hops::PdBaselineConfig cfg;
  cfg.max_iterations = 500000;
  cfg.gap_tolerance = 1e-8;
  const auto r = hops::chambolle_pock_solve(p, Vector::Zero(p.primal_dim()),
                                            Vector::Zero(p.dual_dim()), cfg, quiet());
  ASSERT_TRUE(r.gap_reached);
  EXPECT_LE(r.best_primal - r.best_dual, 1e-8);
  EXPECT_NEAR(hops::evaluate_primal(p, r.best_x), r.best_primal, 1e-12);
  EXPECT_GE(r.best_primal - hops::evaluate_dual(p, r.best_u), -1e-12);
}

TEST(ChambollePock, StationaryAtSaddlePoint) {
  const auto p = hops::build_absolute_loss(hops::Matrix::Ones(1, 1), Vector::Zero(1),
                                           {.dual_radius = 5.0});
  hops::PdBaselineConfig cfg;
  cfg.max_iterations = 25;
  const auto r = hops::chambolle_pock_solve(p, Vector::Zero(1), Vector::Zero(1), cfg);
  EXPECT_EQ(r.x, Vector::Zero(1));
  EXPECT_EQ(r.u, Vector::Zero(1));
  EXPECT_EQ(r.trace.iterations, 25);
}

TEST(ChambollePock, RejectsTooLongSteps) {
  const auto p = fixtures::small_hinge();
  hops::PdBaselineConfig cfg;
  cfg.tau = 2.0 / p.op_norm();
  cfg.sigma = 1.0 / p.op_norm();
  EXPECT_THROW(hops::chambolle_pock_solve(p, Vector::Zero(p.primal_dim()),
                                          Vector::Zero(p.dual_dim()), cfg),
               hops::InputError);
  cfg.tau = 1.0 / p.op_norm();
  EXPECT_NO_THROW(cfg.validate(p.op_norm()));
}

TEST(ChambollePock, TraceCarriesDualAtChecks) {
  const auto p = fixtures::small_polyhedron();
  hops::PdBaselineConfig cfg;
  cfg.max_iterations = 40;
  cfg.gap_check_every = 10;
  const auto r = hops::chambolle_pock_solve(p, Vector::Zero(p.primal_dim()),
                                            Vector::Zero(p.dual_dim()), cfg);
  ASSERT_EQ(r.trace.records.size(), 40u);
  for (const auto& rec : r.trace.records) {
    EXPECT_EQ(rec.dual.has_value(), rec.iteration % 10 == 0) << rec.iteration;
  }
}

TEST(NesterovSmoothing, MuFromEps) {
  const auto p = fixtures::half_line();
  ASSERT_DOUBLE_EQ(hops::dual_diameter_sq(p), 1.0);
  hops::StopRule stop;
  stop.reference = 0.0;
  stop.target = 1e-2;
  const auto r = hops::nesterov_smoothing_solve(p, Vector::Constant(1, 3.0), 1e-2, 1000, {}, stop);
  EXPECT_DOUBLE_EQ(r.mu, 1e-2);
  EXPECT_TRUE(r.converged);
}

TEST(NesterovSmoothing, IterationsGrowWithAccuracyOnAbsoluteLoss) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> normal(0.0, 1.0);
  hops::Matrix a(30, 8);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
  Vector y = a * Vector::Ones(8);
  for (Eigen::Index i = 0; i < 30; i += 3) y[i] += 3.0 * normal(rng);
  const auto p = hops::build_absolute_loss(a, y);
  hops::PdBaselineConfig cp;
  cp.max_iterations = 2000000;
  cp.gap_tolerance = 1e-9;
  const auto ref = hops::chambolle_pock_solve(
      p, Vector::Zero(8), Vector::Zero(30), cp, quiet());
  // The unrestricted dual can only certify through PD's feasible iterates.
  const double f_star = ref.best_primal;
  std::vector<std::int64_t> its;
  for (double eps : {1e-2, 1e-3}) {
    hops::StopRule stop;
    stop.reference = f_star;
    stop.target = eps;
    hops::ApgConfig cfg;
    cfg.variant = hops::ApgVariant::kFista;
    const auto r = hops::nesterov_smoothing_solve(p, Vector::Zero(8), eps, 1000000, cfg, stop);
    ASSERT_TRUE(r.converged) << eps;
    its.push_back(r.result.trace.iterations);
  }
  const double ratio = static_cast<double>(its[1]) / static_cast<double>(its[0]);
  EXPECT_GT(ratio, 2.0);
  EXPECT_LT(ratio, 40.0);
}

}  // namespace
