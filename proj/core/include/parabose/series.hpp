// Copyright 2026 The parabose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>

namespace parabose {

/// Truncation policy for infinite series.
///
/// A series is declared converged once `small_streak` consecutive terms each
/// satisfy |term| <= rel_tol * |partial sum|. `max_terms` is a hard cap; a
/// series that reaches it is reported as NotGuaranteed.
struct SeriesControl {
  double rel_tol = 1e-12;
  int small_streak = 20;
  int max_terms = 100000;

  /// Throws Error(kInvalidParameters) if the invariants do not hold.
  void validate() const;
};

enum class Status { kExact, kConverged, kNotGuaranteed };

std::string_view to_string(Status status);

/// Worst of two statuses (Exact < Converged < NotGuaranteed).
Status combine(Status lhs, Status rhs);

struct EvalResult {
  double value = 0.0;
  double est_error = 0.0;
  std::int64_t terms_used = 0;
  Status status = Status::kExact;

  bool warning() const { return status == Status::kNotGuaranteed; }
};

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Accumulates terms of an infinite series and applies the SeriesControl stop
/// rule. `add` returns true once the series should stop.
class SeriesSummer {
 public:
  explicit SeriesSummer(const SeriesControl& ctl) : ctl_(ctl) {}

  bool add(double term);

  /// Marks the series as terminating: no tail remains.
  void mark_exact() { exact_ = true; }

  double value() const { return sum_.value(); }
  std::int64_t terms() const { return terms_; }
  bool converged() const { return streak_ >= ctl_.small_streak; }

  /// Snapshot. Status is Exact if marked (est_error is then a rounding
  /// estimate), Converged if the stop rule fired, NotGuaranteed otherwise.
  EvalResult result() const;

 private:
  SeriesControl ctl_;
  CompensatedSum sum_;
  std::int64_t terms_ = 0;
  int streak_ = 0;
  double streak_error_ = 0.0;
  double abs_sum_ = 0.0;
  double last_magnitude_ = 0.0;
  bool exact_ = false;
};

/// Pairwise (cascade) summation; the result depends only on the order of
/// `values`, never on how the work producing them was scheduled.
double pairwise_sum(std::span<const double> values);

}  // namespace parabose
