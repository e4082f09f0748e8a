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

#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hops/types.hpp"

namespace hops {

struct TraceRecord {
  std::int64_t iteration = 0;
  double elapsed = 0.0;  // seconds; 0 unless wall-time recording is on
  double primal = 0.0;   // F, never F_mu
  std::optional<double> dual;
  double gap = 0.0;  // see GapKind; NaN when the needed reference is absent
  int stage = 0;
  std::optional<double> smoothing;  // mu or eta of the active stage

  /// Field-wise; NaN compares equal to NaN.
  friend bool operator==(const TraceRecord& a, const TraceRecord& b);
};

enum class SolveStatus {
  kCompleted,    // ran its full budget
  kTargetReached,
  kIterationCap, // stopped by a cap before meeting its own criterion
};

std::string to_string(SolveStatus status);

struct SolveTrace {
  std::vector<TraceRecord> records;
  SolveStatus status = SolveStatus::kCompleted;
  std::int64_t iterations = 0;
  double wall_time = 0.0;

  /// Columns: iter,time_s,F,Phi,gap,stage,smoothing_param. Floats use 17
  /// significant digits; absent values are empty fields.
  void write_csv(std::ostream& out) const;
  static SolveTrace read_csv(std::istream& in);
};

/// What the gap column measures.
enum class GapKind {
  kPrimalVsReference,  // F - F_*
  kDualVsReference,    // Phi_* - Phi
  kDuality,            // F - Phi
};

/// Stop and record policy shared by every solver.
struct StopRule {
  GapKind gap_kind = GapKind::kPrimalVsReference;
  std::optional<double> reference;  // F_* or Phi_*
  std::optional<double> target;     // stop once gap <= target
  std::int64_t max_iterations = 0;  // 0: no cap beyond the solver's own
  bool record_wall_time = false;
  bool keep_records = true;
};

/// Collects per-iteration records and evaluates the stop rule.
class TraceRecorder {
 public:
  explicit TraceRecorder(StopRule rule = {});

  /// Appends one iteration. Returns true when the solver must stop.
  bool record(double primal, std::optional<double> dual, int stage,
              std::optional<double> smoothing);

  std::int64_t iterations() const noexcept { return iterations_; }
  bool target_reached() const noexcept { return target_reached_; }
  bool cap_reached() const noexcept;
  const StopRule& rule() const noexcept { return rule_; }

  SolveTrace finish(SolveStatus status);

 private:
  double gap_of(double primal, std::optional<double> dual) const;

  StopRule rule_;
  SolveTrace trace_;
  std::int64_t iterations_ = 0;
  bool target_reached_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hops
