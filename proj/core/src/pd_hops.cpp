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

#include "hops/pd_hops.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <thread>

#include "hops/dual_hops.hpp"
#include "hops/hops.hpp"

namespace hops {

void PdHopsConfig::validate() const {
  if (!(b > 1.0)) throw InputError("PD-HOPS: b must be > 1");
  if (!(eps > 0.0)) throw InputError("PD-HOPS: eps must be positive");
  if (eps0 && !(*eps0 > 0.0)) throw InputError("PD-HOPS: eps0 must be positive");
  if (check_every < 1) throw InputError("PD-HOPS: check_every must be >= 1");
  if (max_iters_per_stage < 1) {
    throw InputError("PD-HOPS: max_iters_per_stage must be >= 1");
  }
  if (dual_per_primal < 1) {
    throw InputError("PD-HOPS: dual_per_primal must be >= 1");
  }
}

double duality_gap(const CompositeProblem& problem, const Vector& x,
                   const Vector& u) {
  const double phi = evaluate_dual(problem, u);
  if (phi == -kInf) return kInf;
  return evaluate_primal(problem, x) - phi;
}

namespace {

struct Certificate {
  double gap = kInf;
  Vector u;
};

Certificate certify(const CompositeProblem& problem, double primal,
                    const Vector& u) {
  DualCertificate c = certify_dual(problem, u);
  if (c.value == -kInf) return {kInf, u};
  return {primal - c.value, std::move(c.point)};
}

struct DualAverage {
  Vector sum;
  double weight = 0.0;
  std::int64_t count = 0;

  void add(const Vector& u) {
    const double w = static_cast<double>(++count);
    if (sum.size() == 0) sum = Vector::Zero(u.size());
    sum += w * u;
    weight += w;
  }
  Vector mean() const { return sum / weight; }
};

// Primal model whose gradient calls also feed the smoothed maximizers into
// `average`.
CompositeModel averaging_primal_model(const CompositeProblem& problem,
                                      double mu,
                                      std::shared_ptr<DualAverage> average) {
  CompositeModel model = make_primal_model(problem, mu);
  auto oracle = std::make_shared<SmoothedOracle>(problem, mu);
  model.gradient = [oracle, average](const Vector& y) {
    SmoothedEval e = oracle->evaluate(y);
    average->add(e.argmax);
    return std::move(e.grad);
  };
  return model;
}

}  // namespace

PdHopsResult pd_hops_solve(const CompositeProblem& problem, const Vector& x0,
                           const Vector& u0, const PdHopsConfig& config,
                           const StopRule& stop) {
  config.validate();
  if (!problem.has_dual()) {
    throw UnsupportedOperation("PD-HOPS: problem has no dual oracle");
  }
  if (x0.size() != problem.primal_dim() || u0.size() != problem.dual_dim()) {
    throw InputError("PD-HOPS: starting point has the wrong dimension");
  }
  const double d_sq = dual_diameter_sq(problem);
  const double d_tilde_sq = problem.dual().primal_diameter_sq();

  const double f0 = evaluate_primal(problem, x0);
  double eps0 = 0.0;
  if (config.eps0) {
    eps0 = *config.eps0;
  } else {
    const Certificate c0 = certify(problem, f0, u0);
    if (!std::isfinite(c0.gap)) {
      throw InputError("PD-HOPS: initial gap is infinite; supply eps0");
    }
    // A zero initial gap still needs a positive bound for the schedule.
    eps0 = std::max(c0.gap, config.eps);
  }
  const int m = stage_count(eps0, config.eps, config.b);

  TraceRecorder recorder(stop);
  PdHopsResult result;
  Vector x = x0;
  Vector u = u0;
  Vector u_cert = u0;
  bool all_certified = true;
  bool stopped = false;

  for (int s = 1; s <= m && !stopped; ++s) {
    const double eps_s = eps0 / std::pow(config.b, static_cast<double>(s));
    const double mu = eps_s / d_sq;
    const double eta = std::isfinite(d_tilde_sq) ? eps_s / d_tilde_sq : 0.0;
    auto average = std::make_shared<DualAverage>();
    AcceleratedStepper primal(
        config.certify_primal_average
            ? averaging_primal_model(problem, mu, average)
            : make_primal_model(problem, mu),
        x, config.variant, config.sequence_rule);
    AcceleratedStepper dual(make_dual_model(problem, eta), u, config.variant,
                            config.sequence_rule);
    const auto certify_pair = [&](double primal_value) {
      Certificate c = certify(problem, primal_value, dual.current());
      if (config.certify_primal_average && average->count > 0) {
        Certificate alt = certify(problem, primal_value, average->mean());
        if (alt.gap < c.gap) c = std::move(alt);
      }
      return c;
    };
    PdStageInfo info{s, eps_s, mu, eta, 0, kInf, false};
    const double threshold = 2.0 * (eps_s + config.eps);

    std::int64_t k = 0;
    while (k < config.max_iters_per_stage && !stopped) {
      const std::int64_t chunk =
          std::min(config.check_every, config.max_iters_per_stage - k);
      const auto run_dual = [&dual, chunk, &config] {
        for (std::int64_t j = 0; j < chunk * config.dual_per_primal; ++j) {
          dual.step();
        }
      };
      std::thread worker;
      if (config.concurrent) worker = std::thread(run_dual);
      bool dual_done = false;
      // The dual stream always completes its chunk before a certificate.
      const auto finish_dual = [&] {
        if (dual_done) return;
        if (worker.joinable()) {
          worker.join();
        } else {
          run_dual();
        }
        dual_done = true;
      };
      double primal_value = 0.0;
      std::int64_t done = 0;
      for (; done < chunk && !stopped; ++done) {
        primal_value = evaluate_primal(problem, primal.step());
        std::optional<double> dual_column;
        if (done + 1 == chunk) {
          finish_dual();
          Certificate c = certify_pair(primal_value);
          info.gap = c.gap;
          u_cert = std::move(c.u);
          dual_column = primal_value - info.gap;
        }
        stopped = recorder.record(primal_value, dual_column, s, mu);
      }
      if (!dual_done) {
        finish_dual();
        Certificate c = certify_pair(primal_value);
        info.gap = c.gap;
        u_cert = std::move(c.u);
      }
      k += done;
      if (info.gap <= threshold) {
        info.certified = true;
        break;
      }
    }
    info.primal_iterations = k;
    x = primal.current();
    u = dual.current();
    all_certified = all_certified && info.certified;
    result.stages.push_back(info);
    result.final_gap = info.gap;
  }

  if (m == 0) {
    const Certificate c = certify(problem, f0, u0);
    result.final_gap = c.gap;
    u_cert = c.u;
  }
  result.x = std::move(x);
  result.u = std::move(u_cert);
  result.converged = all_certified && !stopped;
  result.primal_iterations = recorder.iterations();
  SolveStatus status = SolveStatus::kCompleted;
  if (!all_certified) status = SolveStatus::kIterationCap;
  result.trace = recorder.finish(status);
  return result;
}

}  // namespace hops
