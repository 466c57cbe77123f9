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

#include "parabose/series.hpp"

#include <algorithm>
#include <limits>

#include "parabose/error.hpp"

namespace parabose {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameters:
      return "InvalidParameters";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kTruncationTooSmall:
      return "TruncationTooSmall";
    case ErrorCode::kNotGuaranteedConvergence:
      return "NotGuaranteedConvergence";
    case ErrorCode::kOutOfSupportedRange:
      return "OutOfSupportedRange";
    case ErrorCode::kQuadratureDidNotConverge:
      return "QuadratureDidNotConverge";
  }
  return "Unknown";
}

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0) || small_streak < 1 || max_terms < small_streak) {
    throw Error(ErrorCode::kInvalidParameters,
                "SeriesControl requires rel_tol > 0, small_streak >= 1 and "
                "max_terms >= small_streak");
  }
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kExact:
      return "Exact";
    case Status::kConverged:
      return "Converged";
    case Status::kNotGuaranteed:
      return "NotGuaranteed";
  }
  return "Unknown";
}

Status combine(Status lhs, Status rhs) {
  return static_cast<int>(lhs) >= static_cast<int>(rhs) ? lhs : rhs;
}

bool SeriesSummer::add(double term) {
  sum_ += term;
  ++terms_;
  const double magnitude = std::fabs(term);
  abs_sum_ += magnitude;
  last_magnitude_ = magnitude;
  if (magnitude <= ctl_.rel_tol * std::fabs(sum_.value())) {
    ++streak_;
    streak_error_ += magnitude;
  } else {
    streak_ = 0;
    streak_error_ = 0.0;
  }
  return converged() || terms_ >= ctl_.max_terms;
}

EvalResult SeriesSummer::result() const {
  EvalResult r;
  r.value = sum_.value();
  r.terms_used = terms_;
  if (exact_) {
    r.status = Status::kExact;
    r.est_error = 2.0 * std::numeric_limits<double>::epsilon() * abs_sum_;
  } else if (converged()) {
    r.status = Status::kConverged;
    r.est_error = streak_error_;
  } else {
    r.status = Status::kNotGuaranteed;
    // The best available statement is the size of the trailing terms.
    r.est_error = std::max(streak_error_, last_magnitude_);
  }
  return r;
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 16;
  if (values.size() <= kLeaf) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace parabose
