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

#include "hops/trace.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace hops {

namespace {

bool same(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

bool same(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same(*a, *b);
}

}  // namespace

bool operator==(const TraceRecord& a, const TraceRecord& b) {
  return a.iteration == b.iteration && same(a.elapsed, b.elapsed) &&
         same(a.primal, b.primal) && same(a.dual, b.dual) &&
         same(a.gap, b.gap) && a.stage == b.stage &&
         same(a.smoothing, b.smoothing);
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kCompleted:
      return "completed";
    case SolveStatus::kTargetReached:
      return "target_reached";
    case SolveStatus::kIterationCap:
      return "iteration_cap";
  }
  return "unknown";
}

namespace {

constexpr const char* kHeader = "iter,time_s,F,Phi,gap,stage,smoothing_param";

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& field, std::int64_t line) {
  if (field == "nan") return std::nan("");
  if (field == "inf") return kInf;
  if (field == "-inf") return -kInf;
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("trace csv: bad number '" + field + "'", line);
  }
  return v;
}

std::int64_t parse_int(const std::string& field, std::int64_t line) {
  std::int64_t v = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("trace csv: bad integer '" + field + "'", line);
  }
  return v;
}

}  // namespace

void SolveTrace::write_csv(std::ostream& out) const {
  out << kHeader << '\n';
  for (const auto& r : records) {
    out << r.iteration << ',' << format_double(r.elapsed) << ','
        << format_double(r.primal) << ','
        << (r.dual ? format_double(*r.dual) : "") << ','
        << format_double(r.gap) << ',' << r.stage << ','
        << (r.smoothing ? format_double(*r.smoothing) : "") << '\n';
  }
}

SolveTrace SolveTrace::read_csv(std::istream& in) {
  SolveTrace trace;
  std::string line;
  std::int64_t lineno = 1;
  if (!std::getline(in, line) || line != kHeader) {
    throw ParseError("trace csv: missing or unexpected header", lineno);
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 7) {
      throw ParseError("trace csv: expected 7 fields", lineno);
    }
    TraceRecord r;
    r.iteration = parse_int(fields[0], lineno);
    r.elapsed = parse_double(fields[1], lineno);
    r.primal = parse_double(fields[2], lineno);
    if (!fields[3].empty()) r.dual = parse_double(fields[3], lineno);
    r.gap = parse_double(fields[4], lineno);
    r.stage = static_cast<int>(parse_int(fields[5], lineno));
    if (!fields[6].empty()) r.smoothing = parse_double(fields[6], lineno);
    trace.records.push_back(r);
  }
  if (!trace.records.empty()) trace.iterations = trace.records.back().iteration;
  return trace;
}

TraceRecorder::TraceRecorder(StopRule rule)
    : rule_(rule), start_(std::chrono::steady_clock::now()) {}

double TraceRecorder::gap_of(double primal, std::optional<double> dual) const {
  switch (rule_.gap_kind) {
    case GapKind::kPrimalVsReference:
      return rule_.reference ? primal - *rule_.reference : std::nan("");
    case GapKind::kDualVsReference:
      return rule_.reference && dual ? *rule_.reference - *dual : std::nan("");
    case GapKind::kDuality:
      return dual ? primal - *dual : std::nan("");
  }
  return std::nan("");
}

bool TraceRecorder::record(double primal, std::optional<double> dual,
                           int stage, std::optional<double> smoothing) {
  ++iterations_;
  const double gap = gap_of(primal, dual);
  if (rule_.keep_records) {
    TraceRecord r;
    r.iteration = iterations_;
    if (rule_.record_wall_time) {
      r.elapsed = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
    }
    r.primal = primal;
    r.dual = dual;
    r.gap = gap;
    r.stage = stage;
    r.smoothing = smoothing;
    trace_.records.push_back(r);
  }
  if (rule_.target && gap <= *rule_.target) target_reached_ = true;
  return target_reached_ || cap_reached();
}

bool TraceRecorder::cap_reached() const noexcept {
  return rule_.max_iterations > 0 && iterations_ >= rule_.max_iterations;
}

SolveTrace TraceRecorder::finish(SolveStatus status) {
  trace_.iterations = iterations_;
  trace_.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
  if (target_reached_) status = SolveStatus::kTargetReached;
  trace_.status = status;
  return std::move(trace_);
}

}  // namespace hops
