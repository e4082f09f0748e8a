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

// Per-call cost of the oracles every solver iteration pays for, on the
// desk-scale instance of each family.

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <string>

#include "hops/apg.hpp"
#include "hops/harness.hpp"
#include "hops/smoothing.hpp"

namespace {

const char* const kFamilies[] = {"hinge_l1", "rof", "matrix_decomp", "polyhedron"};

const hops::CompositeProblem& instance(int family) {
  static std::map<int, hops::BuiltInstance> cache;
  auto it = cache.find(family);
  if (it == cache.end()) {
    hops::ProblemSpec s;
    s.id = kFamilies[family];
    if (s.id == "rof") s.numbers = {{"crop_rows", 64}, {"crop_cols", 64}};
    if (s.id == "matrix_decomp") s.numbers = {{"rows", 50}, {"cols", 50}};
    if (s.id == "polyhedron") s.numbers = {{"dim", 50}, {"inequalities", 60}, {"equalities", 20}};
    it = cache.emplace(family, hops::build_instance(s)).first;
  }
  return it->second.problem;
}

hops::Vector random_point(hops::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  hops::Vector v(n);
  for (auto& e : v) e = g(rng);
  return v;
}

void BM_SmoothedOracle(benchmark::State& state) {
  const auto& p = instance(static_cast<int>(state.range(0)));
  state.SetLabel(kFamilies[state.range(0)]);
  const hops::SmoothedOracle f(p, 1e-2);
  const hops::Vector x = random_point(p.primal_dim(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(f.evaluate(x));
}

void BM_CompositeProx(benchmark::State& state) {
  const auto& p = instance(static_cast<int>(state.range(0)));
  state.SetLabel(kFamilies[state.range(0)]);
  const hops::Vector x = random_point(p.primal_dim(), 2);
  const hops::Vector v = random_point(p.primal_dim(), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hops::composite_prox(10.0, v, 1.0, p.simple_term(), p.domain(), x));
  }
}

void BM_DualSmoothedOracle(benchmark::State& state) {
  const auto& p = instance(static_cast<int>(state.range(0)));
  state.SetLabel(kFamilies[state.range(0)]);
  const hops::DualSmoothedOracle psi(p, p.dual().exactly_smooth() ? 0.0 : 1e-2);
  const hops::Vector u = p.max_structure().project(random_point(p.dual_dim(), 4));
  for (auto _ : state) benchmark::DoNotOptimize(psi.evaluate(u));
}

// 100 FISTA iterations per benchmark iteration; items are APG steps.
void BM_ApgSteps(benchmark::State& state) {
  const auto& p = instance(static_cast<int>(state.range(0)));
  state.SetLabel(kFamilies[state.range(0)]);
  const hops::Vector x0 = hops::Vector::Zero(p.primal_dim());
  hops::ApgConfig cfg;
  cfg.variant = hops::ApgVariant::kFista;
  hops::StopRule quiet;
  quiet.keep_records = false;
  for (auto _ : state) benchmark::DoNotOptimize(hops::apg_solve(p, x0, 100, 1e-2, cfg, quiet));
  state.SetItemsProcessed(state.iterations() * 100);
}

BENCHMARK(BM_SmoothedOracle)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CompositeProx)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DualSmoothedOracle)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApgSteps)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
