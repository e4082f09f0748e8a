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

#include "hops/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hops/baselines.hpp"
#include "hops/hops.hpp"
#include "hops/pd_hops.hpp"
#include "hops/problems.hpp"

#ifndef HOPS_DEFAULT_DATA_DIR
#define HOPS_DEFAULT_DATA_DIR "data"
#endif

namespace hops {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kPd:
      return "PD";
    case Algorithm::kApgD:
      return "APG-D";
    case Algorithm::kApgF:
      return "APG-F";
    case Algorithm::kHopsD:
      return "HOPS-D";
    case Algorithm::kHopsF:
      return "HOPS-F";
    case Algorithm::kPdHops:
      return "PD-HOPS";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (auto a : {Algorithm::kPd, Algorithm::kApgD, Algorithm::kApgF,
                 Algorithm::kHopsD, Algorithm::kHopsF, Algorithm::kPdHops}) {
    if (to_string(a) == name) return a;
  }
  throw InputError("unknown algorithm '" + name + "'");
}

double ProblemSpec::number(const std::string& key, double fallback) const {
  const auto it = numbers.find(key);
  return it == numbers.end() ? fallback : it->second;
}

std::string ProblemSpec::text(const std::string& key,
                              const std::string& fallback) const {
  const auto it = strings.find(key);
  return it == strings.end() ? fallback : it->second;
}

namespace {

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

class Fnv1a {
 public:
  void add(const void* data, std::size_t size) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      hash_ ^= p[i];
      hash_ *= 1099511628211ULL;
    }
  }
  void add(const std::string& s) {
    add(s.data(), s.size());
    add("\0", 1);
  }
  void add(double v) { add(&v, sizeof(v)); }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 14695981039346656037ULL;
};

std::string fingerprint_of(const ProblemSpec& spec,
                           const CompositeProblem& problem) {
  Fnv1a h;
  h.add(spec.id);
  for (const auto& [k, v] : spec.numbers) {
    h.add(k);
    h.add(v);
  }
  for (const auto& [k, v] : spec.strings) {
    h.add(k);
    h.add(v);
  }
  const Index d = problem.primal_dim();
  const Index n = problem.dual_dim();
  h.add(static_cast<double>(d));
  h.add(static_cast<double>(n));
  // Operator and objective probes make the key depend on file contents too.
  Vector x(d);
  for (Index i = 0; i < d; ++i) x[i] = std::sin(static_cast<double>(i) + 1.0);
  Vector u(n);
  for (Index i = 0; i < n; ++i) u[i] = std::cos(static_cast<double>(i) + 1.0);
  h.add(evaluate_primal(problem, x));
  h.add(evaluate_primal(problem, 0.01 * x));
  h.add(problem.map().adjoint(u).squaredNorm());
  h.add(problem.map().forward(x).squaredNorm());
  return h.hex();
}

std::uint64_t spec_seed(const ProblemSpec& spec) {
  return static_cast<std::uint64_t>(spec.number("seed", 0.0));
}

Index spec_index(const ProblemSpec& spec, const std::string& key,
                 Index fallback) {
  return static_cast<Index>(spec.number(key, static_cast<double>(fallback)));
}

}  // namespace

BuiltInstance build_instance(const ProblemSpec& spec) {
  const std::uint64_t seed = spec_seed(spec);
  std::optional<Matrix> truth;
  std::optional<double> optimum;
  std::optional<CompositeProblem> problem;
  std::function<std::vector<std::pair<Vector, Vector>>(const Vector&)> crossover;

  if (spec.id == "hinge_l1") {
    HingeL1Instance data;
    const std::string path = spec.text("data_path", "");
    if (!path.empty()) {
      data = load_libsvm(path, spec_index(spec, "features", 300));
    } else if (spec.numbers.count("samples") || spec.numbers.count("density")) {
      SyntheticClassificationSpec s;
      s.samples = spec_index(spec, "samples", s.samples);
      s.features = spec_index(spec, "features", s.features);
      s.density = spec.number("density", s.density);
      s.positive_fraction = spec.number("positive_fraction", s.positive_fraction);
      data = generate_sparse_classification(s, seed);
    } else {
      data = load_w1a_or_synthetic(seed);
    }
    HingeL1Options opts;
    if (spec.numbers.count("lambda")) opts.lambda = spec.number("lambda", 0.0);
    problem = build_hinge_l1(data, opts);
    const double lambda = opts.lambda.value_or(1.0 / static_cast<double>(data.labels.size()));
    crossover = [data, lambda](const Vector& x) {
      std::vector<std::pair<Vector, Vector>> out;
      for (auto& v : hinge_l1_crossover(data, lambda, x)) {
        out.emplace_back(std::move(v.x), std::move(v.u));
      }
      return out;
    };
  } else if (spec.id == "rof") {
    const std::string path = spec.text(
        "image_path", std::string(HOPS_DEFAULT_DATA_DIR) + "/cameraman.pgm");
    GrayImage img = load_pgm(path);
    const Index rows = spec_index(spec, "crop_rows", img.rows);
    const Index cols = spec_index(spec, "crop_cols", img.cols);
    img = crop(img, spec_index(spec, "crop_row0", (img.rows - rows) / 2),
               spec_index(spec, "crop_col0", (img.cols - cols) / 2), rows, cols);
    problem = build_rof(make_rof_instance(img, spec.number("lambda", 20.0),
                                          spec.number("noise_sd", 0.05), seed));
  } else if (spec.id == "matrix_decomp") {
    auto data = generate_synthetic_lowrank(
        spec_index(spec, "rows", 100), spec_index(spec, "cols", 100),
        spec_index(spec, "rank", 10), spec.number("corruption", 0.1),
        spec.number("noise_sd", 1.0), seed);
    truth = data.low_rank_truth;
    MatrixDecompOptions opts;
    if (spec.numbers.count("lambda")) opts.lambda = spec.number("lambda", 0.0);
    problem = build_matrix_decomp(data, opts);
  } else if (spec.id == "polyhedron") {
    problem = build_polyhedron(generate_polyhedron(
        spec_index(spec, "dim", 50), spec_index(spec, "inequalities", 60),
        spec_index(spec, "equalities", 20), seed));
    optimum = 0.0;
  } else if (spec.id == "absolute_loss") {
    const Index rows = spec_index(spec, "rows", 40);
    const Index cols = spec_index(spec, "cols", 10);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix a(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) a(i, j) = normal(rng);
    }
    Vector x_true(cols);
    for (Index j = 0; j < cols; ++j) x_true[j] = normal(rng);
    Vector y = a * x_true;
    for (Index i = 0; i < rows; i += 4) y[i] += 5.0 * normal(rng);
    problem = build_absolute_loss(std::move(a), std::move(y));
  } else {
    throw InputError("unknown problem id '" + spec.id + "'");
  }
  std::string fp = fingerprint_of(spec, *problem);
  return BuiltInstance{std::move(*problem), std::move(truth), optimum,
                       std::move(fp), std::move(crossover)};
}

Reference compute_reference(const BuiltInstance& instance,
                            const ReferencePolicy& policy, double min_eps) {
  const bool closed =
      policy.kind == ReferenceKind::kClosedForm ||
      (policy.kind == ReferenceKind::kAuto && instance.closed_form_optimum);
  if (closed) {
    if (!instance.closed_form_optimum) {
      throw InputError("reference: no closed-form optimum for this instance");
    }
    return {*instance.closed_form_optimum, *instance.closed_form_optimum,
            "closed_form"};
  }
  const double target = policy.gap_factor * min_eps;
  fs::path cache_file;
  if (!policy.cache_dir.empty()) {
    cache_file = fs::path(policy.cache_dir) / (instance.fingerprint + ".json");
    std::ifstream in(cache_file);
    if (in) {
      try {
        const json j = json::parse(in);
        const double primal = j.at("primal").get<double>();
        const double dual = j.at("dual").get<double>();
        if (primal - dual <= target) return {primal, dual, "cache"};
      } catch (const json::exception&) {
        // A corrupt cache entry is recomputed below.
      }
    }
  }
  const CompositeProblem& p = instance.problem;
  StopRule quiet;
  quiet.keep_records = false;
  double best_primal = kInf;
  double best_dual = -kInf;
  Vector best_x;
  Vector x = Vector::Zero(p.primal_dim());
  Vector u = Vector::Zero(p.dual_dim());
  std::int64_t used = 0;
  std::int64_t round = instance.crossover ? 5000 : policy.max_iterations;
  while (used < policy.max_iterations) {
    PdBaselineConfig cfg;
    cfg.max_iterations = std::min(round, policy.max_iterations - used);
    cfg.gap_tolerance = target;
    cfg.gap_check_every = 50;
    cfg.strong_convexity = p.simple_term().strong_convexity();
    const auto run = chambolle_pock_solve(p, x, u, cfg, quiet);
    used += cfg.max_iterations;
    x = run.x;
    u = run.u;
    if (run.best_primal < best_primal) {
      best_primal = run.best_primal;
      best_x = run.best_x;
    }
    best_dual = std::max(best_dual, run.best_dual);
    if (best_primal - best_dual > target && instance.crossover) {
      for (const auto& [cx, cu] : instance.crossover(best_x)) {
        best_primal = std::min(best_primal, evaluate_primal(p, cx));
        best_dual = std::max(best_dual, certify_dual(p, cu).value);
      }
    }
    if (best_primal - best_dual <= target) break;
    round *= 2;
  }
  if (!(best_primal - best_dual <= target)) {
    throw NumericalError("reference: PD gap " +
                         format_g(best_primal - best_dual) + " above target " +
                         format_g(target));
  }
  Reference ref{best_primal, best_dual, "pd"};
  if (!cache_file.empty()) {
    fs::create_directories(cache_file.parent_path());
    std::ofstream out(cache_file);
    out << json{{"primal", ref.primal}, {"dual", *ref.dual},
                {"fingerprint", instance.fingerprint}}
               .dump(2)
        << '\n';
  }
  return ref;
}

namespace {

ReferenceKind parse_reference_kind(const std::string& s) {
  if (s == "auto") return ReferenceKind::kAuto;
  if (s == "closed_form") return ReferenceKind::kClosedForm;
  if (s == "long_pd") return ReferenceKind::kLongPd;
  throw InputError("unknown reference policy '" + s + "'");
}

std::string reference_kind_name(ReferenceKind k) {
  switch (k) {
    case ReferenceKind::kAuto:
      return "auto";
    case ReferenceKind::kClosedForm:
      return "closed_form";
    case ReferenceKind::kLongPd:
      return "long_pd";
  }
  return "auto";
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
  RunConfig c;
  try {
    const json j = json::parse(text);
    const json& prob = j.at("problem");
    c.problem.id = prob.at("id").get<std::string>();
    for (const auto& [key, value] : prob.items()) {
      if (key == "id") continue;
      if (value.is_number()) {
        c.problem.numbers[key] = value.get<double>();
      } else if (value.is_string()) {
        c.problem.strings[key] = value.get<std::string>();
      } else {
        throw ParseError("config: problem." + key + " must be a number or string", 0);
      }
    }
    for (const auto& a : j.at("algorithms")) {
      c.algorithms.push_back(parse_algorithm(a.get<std::string>()));
    }
    c.eps = j.at("eps").get<std::vector<double>>();
    if (j.contains("grids")) {
      const json& g = j["grids"];
      if (g.contains("t")) c.t_grid = g["t"].get<std::vector<std::int64_t>>();
      if (g.contains("b")) c.b_grid = g["b"].get<std::vector<double>>();
      if (g.contains("pd_step_ratios")) {
        c.pd_step_ratios = g["pd_step_ratios"].get<std::vector<double>>();
      }
    }
    if (j.contains("reference")) {
      const json& r = j["reference"];
      if (r.contains("policy")) {
        c.reference.kind = parse_reference_kind(r["policy"].get<std::string>());
      }
      c.reference.gap_factor = r.value("gap_factor", c.reference.gap_factor);
      c.reference.max_iterations =
          r.value("max_iterations", c.reference.max_iterations);
      c.reference.cache_dir = r.value("cache_dir", c.reference.cache_dir);
    }
    if (j.contains("run")) {
      const json& r = j["run"];
      c.repetitions = r.value("repetitions", c.repetitions);
      c.seed = r.value("seed", c.seed);
      c.output_dir = r.value("output_dir", c.output_dir);
      c.jobs = r.value("jobs", c.jobs);
      c.max_iterations = r.value("max_iterations", c.max_iterations);
      c.record_wall_time = r.value("record_wall_time", c.record_wall_time);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what(), 0);
  }
  if (c.algorithms.empty()) throw ParseError("config: no algorithms", 0);
  if (c.eps.empty()) throw ParseError("config: empty eps list", 0);
  for (double e : c.eps) {
    if (!(e > 0.0)) throw ParseError("config: eps must be positive", 0);
  }
  if (c.repetitions < 1 || c.jobs < 1 || c.max_iterations < 1) {
    throw ParseError("config: repetitions, jobs and max_iterations must be >= 1", 0);
  }
  return c;
}

std::string RunConfig::to_json() const {
  json prob = {{"id", problem.id}};
  for (const auto& [k, v] : problem.numbers) prob[k] = v;
  for (const auto& [k, v] : problem.strings) prob[k] = v;
  json algos = json::array();
  for (auto a : algorithms) algos.push_back(to_string(a));
  json j = {
      {"problem", prob},
      {"algorithms", algos},
      {"eps", eps},
      {"grids", {{"t", t_grid}, {"b", b_grid}, {"pd_step_ratios", pd_step_ratios}}},
      {"reference",
       {{"policy", reference_kind_name(reference.kind)},
        {"gap_factor", reference.gap_factor},
        {"max_iterations", reference.max_iterations},
        {"cache_dir", reference.cache_dir}}},
      {"run",
       {{"repetitions", repetitions},
        {"seed", seed},
        {"output_dir", output_dir},
        {"jobs", jobs},
        {"max_iterations", max_iterations},
        {"record_wall_time", record_wall_time}}}};
  return j.dump(2);
}

namespace {

struct RunOutput {
  SolveTrace trace;
  Vector x;
};

struct Candidate {
  std::string params;
  std::function<RunOutput(const StopRule&)> run;
};

std::vector<Candidate> candidates_for(const BuiltInstance& instance,
                                      const Reference& reference,
                                      Algorithm algorithm, double eps,
                                      const RunConfig& config) {
  const CompositeProblem& p = instance.problem;
  const Vector x0 = Vector::Zero(p.primal_dim());
  const Vector u0 = Vector::Zero(p.dual_dim());
  const std::int64_t cap = config.max_iterations;
  std::vector<Candidate> out;
  switch (algorithm) {
    case Algorithm::kPd:
      for (double r : config.pd_step_ratios) {
        out.push_back({"ratio=" + format_short(r), [&p, x0, u0, r, cap](const StopRule& s) {
                         PdBaselineConfig cfg;
                         cfg.tau = r / p.op_norm();
                         cfg.sigma = 1.0 / (r * p.op_norm());
                         cfg.max_iterations = cap;
                         cfg.gap_check_every = cap;  // F-based stopping only
                         auto res = chambolle_pock_solve(p, x0, u0, cfg, s);
                         return RunOutput{std::move(res.trace), std::move(res.x)};
                       }});
      }
      break;
    case Algorithm::kApgD:
    case Algorithm::kApgF: {
      ApgConfig cfg;
      cfg.variant = algorithm == Algorithm::kApgD ? ApgVariant::kDualAveraging
                                                  : ApgVariant::kFista;
      out.push_back({"mu=eps/D^2", [&p, x0, eps, cap, cfg](const StopRule& s) {
                       auto res = nesterov_smoothing_solve(p, x0, eps, cap, cfg, s);
                       return RunOutput{std::move(res.result.trace),
                                        std::move(res.result.x)};
                     }});
      break;
    }
    case Algorithm::kHopsD:
    case Algorithm::kHopsF: {
      const ApgVariant variant = algorithm == Algorithm::kHopsD
                                     ? ApgVariant::kDualAveraging
                                     : ApgVariant::kFista;
      const double eps0 = evaluate_primal(p, x0) - reference.primal;
      const double d_sq = dual_diameter_sq(p);
      for (auto t : config.t_grid) {
        for (double b : config.b_grid) {
          out.push_back(
              {"t=" + std::to_string(t) + " b=" + format_short(b),
               [&p, x0, eps, eps0, d_sq, t, b, variant](const StopRule& s) {
                 // HOPS guarantees 2x its schedule accuracy.
                 const double sched_eps = eps / 2.0;
                 const auto sched = StageSchedule::prox_friendly(
                     std::max(eps0, sched_eps * (1.0 + 1e-9)), sched_eps, b, t,
                     d_sq);
                 auto res = hops_solve(p, x0, sched, variant, {}, s);
                 return RunOutput{std::move(res.trace), std::move(res.x)};
               }});
        }
      }
      break;
    }
    case Algorithm::kPdHops:
      for (auto variant : {ApgVariant::kDualAveraging, ApgVariant::kFista}) {
        const std::string tag = variant == ApgVariant::kFista ? "F" : "D";
        for (double b : config.b_grid) {
          out.push_back({"b=" + format_short(b) + " primal=" + tag,
                         [&p, x0, u0, eps, b, cap, variant](const StopRule& s) {
                           PdHopsConfig cfg;
                           // The certificate is 4x the configured accuracy.
                           cfg.eps = eps / 4.0;
                           cfg.b = b;
                           cfg.variant = variant;
                           cfg.max_iters_per_stage = cap;
                           auto res = pd_hops_solve(p, x0, u0, cfg, s);
                           return RunOutput{std::move(res.trace), std::move(res.x)};
                         }});
        }
      }
      break;
  }
  return out;
}

double last_gap(const SolveTrace& t) {
  return t.records.empty() ? kInf : t.records.back().gap;
}

}  // namespace

CellResult run_cell(const BuiltInstance& instance, const Reference& reference,
                    Algorithm algorithm, double eps, const RunConfig& config) {
  StopRule stop;
  stop.gap_kind = GapKind::kPrimalVsReference;
  stop.reference = reference.primal;
  stop.target = eps;
  stop.max_iterations = config.max_iterations;
  stop.record_wall_time = config.record_wall_time;

  CellResult cell;
  cell.algorithm = algorithm;
  cell.eps = eps;
  const auto candidates =
      candidates_for(instance, reference, algorithm, eps, config);
  std::optional<std::size_t> best;
  RunOutput best_out;
  double best_gap = kInf;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    // Only a strictly shorter run can replace the current best.
    StopRule rule = stop;
    if (cell.converged) {
      if (cell.iterations <= 1) break;
      rule.max_iterations = cell.iterations - 1;
    }
    RunOutput out = candidates[i].run(rule);
    const bool ok = out.trace.status == SolveStatus::kTargetReached;
    if (ok) {
      if (!cell.converged || out.trace.iterations < cell.iterations) {
        cell.converged = true;
        cell.iterations = out.trace.iterations;
        best = i;
        best_out = std::move(out);
      }
    } else if (!cell.converged && last_gap(out.trace) < best_gap) {
      best_gap = last_gap(out.trace);
      best = i;
      cell.iterations = out.trace.iterations;
      best_out = std::move(out);
    }
  }
  if (!best) return cell;
  cell.best_params = candidates[*best].params;
  std::vector<double> times{best_out.trace.wall_time};
  StopRule timing = stop;
  timing.keep_records = false;
  for (int r = 1; r < config.repetitions; ++r) {
    times.push_back(candidates[*best].run(timing).trace.wall_time);
  }
  const double n = static_cast<double>(times.size());
  cell.time_mean = std::accumulate(times.begin(), times.end(), 0.0) / n;
  double ss = 0.0;
  for (double t : times) ss += (t - cell.time_mean) * (t - cell.time_mean);
  cell.time_sd = times.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  cell.trace = std::move(best_out.trace);
  cell.solution = std::move(best_out.x);
  return cell;
}

std::string format_summary(const std::string& problem,
                           const std::vector<CellResult>& cells) {
  std::vector<double> eps;
  std::vector<Algorithm> algos;
  for (const auto& c : cells) {
    if (std::find(eps.begin(), eps.end(), c.eps) == eps.end()) eps.push_back(c.eps);
    if (std::find(algos.begin(), algos.end(), c.algorithm) == algos.end()) {
      algos.push_back(c.algorithm);
    }
  }
  std::sort(eps.begin(), eps.end(), std::greater<>());
  std::ostringstream out;
  out << problem << '\n';
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-10s", "algorithm");
  out << buf;
  for (double e : eps) {
    char label[40];
    std::snprintf(label, sizeof(label), "eps=%g", e);
    std::snprintf(buf, sizeof(buf), " | %-28s", label);
    out << buf;
  }
  out << '\n';
  for (auto a : algos) {
    std::snprintf(buf, sizeof(buf), "%-10s", to_string(a).c_str());
    out << buf;
    for (double e : eps) {
      std::string entry = "-";
      for (const auto& c : cells) {
        if (c.algorithm != a || c.eps != e) continue;
        if (!c.converged) {
          entry = "DNF";
        } else {
          char cell[96];
          std::snprintf(cell, sizeof(cell), "%lld (%.3gs +- %.2g)",
                        static_cast<long long>(c.iterations), c.time_mean,
                        c.time_sd);
          entry = cell;
        }
      }
      std::snprintf(buf, sizeof(buf), " | %-28s", entry.c_str());
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::string eps_tag(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", eps);
  return buf;
}

}  // namespace

ExperimentResult run_experiment(const RunConfig& config) {
  RunConfig cfg = config;
  if (!cfg.problem.numbers.count("seed")) {
    cfg.problem.numbers["seed"] = static_cast<double>(cfg.seed);
  }
  const BuiltInstance instance = build_instance(cfg.problem);
  const double min_eps = *std::min_element(cfg.eps.begin(), cfg.eps.end());
  ExperimentResult result;
  result.reference = compute_reference(instance, cfg.reference, min_eps);

  struct Job {
    Algorithm algorithm;
    double eps;
  };
  std::vector<Job> jobs;
  for (auto a : cfg.algorithms) {
    for (double e : cfg.eps) jobs.push_back({a, e});
  }
  result.cells.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        result.cells[i] = run_cell(instance, result.reference,
                                   jobs[i].algorithm, jobs[i].eps, cfg);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (const auto& c : result.cells) {
    result.all_converged = result.all_converged && c.converged;
  }
  if (cfg.output_dir.empty()) return result;

  const fs::path dir = fs::path(cfg.output_dir) / cfg.problem.id;
  fs::create_directories(dir);
  for (const auto& c : result.cells) {
    std::ofstream out(dir / (to_string(c.algorithm) + "_eps" + eps_tag(c.eps) + ".csv"));
    c.trace.write_csv(out);
  }
  std::ofstream summary(fs::path(cfg.output_dir) / "summary.csv");
  summary << "problem,algorithm,eps,status,iterations,time_mean,time_sd,params\n";
  for (const auto& c : result.cells) {
    summary << cfg.problem.id << ',' << to_string(c.algorithm) << ','
            << format_g(c.eps) << ',' << (c.converged ? "ok" : "DNF") << ','
            << c.iterations << ',' << format_g(c.time_mean) << ','
            << format_g(c.time_sd) << ',' << c.best_params << '\n';
  }
  std::ofstream table(fs::path(cfg.output_dir) / "summary.txt");
  table << "reference F_* = " << format_g(result.reference.primal) << " ("
        << result.reference.source << ")\n"
        << format_summary(cfg.problem.id, result.cells);
  return result;
}

std::string report_from_summary(const std::string& summary_csv_path) {
  std::ifstream in(summary_csv_path);
  if (!in) throw ParseError("cannot open " + summary_csv_path, 0);
  std::string line;
  std::int64_t lineno = 1;
  if (!std::getline(in, line) ||
      line != "problem,algorithm,eps,status,iterations,time_mean,time_sd,params") {
    throw ParseError("summary: unexpected header", lineno);
  }
  std::map<std::string, std::vector<CellResult>> by_problem;
  std::vector<std::string> order;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() == 7) f.emplace_back();
    if (f.size() != 8) throw ParseError("summary: expected 8 fields", lineno);
    CellResult c;
    try {
      c.algorithm = parse_algorithm(f[1]);
      c.eps = std::stod(f[2]);
      c.converged = f[3] == "ok";
      c.iterations = std::stoll(f[4]);
      c.time_mean = std::stod(f[5]);
      c.time_sd = std::stod(f[6]);
    } catch (const std::exception&) {
      throw ParseError("summary: bad field", lineno);
    }
    c.best_params = f[7];
    if (!by_problem.count(f[0])) order.push_back(f[0]);
    by_problem[f[0]].push_back(std::move(c));
  }
  std::string out;
  for (const auto& p : order) out += format_summary(p, by_problem[p]);
  return out;
}

}  // namespace hops
