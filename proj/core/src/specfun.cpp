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

#include "parabose/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parabose/error.hpp"

namespace parabose {

double rising_factorial(double x, int k) {
  double product = 1.0;
  for (int i = 0; i < k; ++i) product *= x + i;
  return product;
}

double factorial(int k) {
  double product = 1.0;
  for (int i = 2; i <= k; ++i) product *= i;
  return product;
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

std::optional<int> nonpositive_integer(double x) {
  if (x <= 0.0 && x == std::floor(x) && x > -2147483647.0) {
    return static_cast<int>(-x);
  }
  return std::nullopt;
}

LaguerreSequence::LaguerreSequence(double alpha, double z)
    : alpha_(alpha), z_(z) {}

void LaguerreSequence::advance() {
  const int k = degree_;
  double next;
  if (k == 0) {
    next = alpha_ + 1.0 - z_;
  } else {
    next = ((2.0 * k + 1.0 + alpha_ - z_) * current_ - (k + alpha_) * previous_) /
           (k + 1.0);
  }
  previous_ = current_;
  current_ = next;
  ++degree_;
}

double laguerre_gen(int n, double alpha, double z) {
  LaguerreSequence seq(alpha, z);
  while (seq.degree() < n) seq.advance();
  return seq.value();
}

double hermite(int n, double x) {
  if (n == 0) return 1.0;
  double previous = 1.0;
  double current = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

namespace {

// Smallest N over numerator parameters equal to -N.
std::optional<int> termination_index(const std::vector<double>& numer) {
  std::optional<int> best;
  for (double a : numer) {
    if (auto n = nonpositive_integer(a); n && (!best || *n < *best)) best = n;
  }
  return best;
}

// Throws if some denominator (b)_k vanishes for a k that is actually reached.
void check_denominators(const std::vector<double>& denom,
                        std::optional<int> terminate_at) {
  for (double b : denom) {
    if (auto m = nonpositive_integer(b)) {
      // (-M)_k vanishes for k >= M + 1, so terms up to N need M >= N.
      if (!terminate_at || *m < *terminate_at) {
        throw Error(ErrorCode::kInvalidParameters,
                    "denominator parameter " + std::to_string(b) +
                        " vanishes before the series terminates");
      }
    }
  }
}

double term_ratio(const std::vector<double>& numer,
                  const std::vector<double>& denom, double z, int k) {
  double ratio = z / (k + 1.0);
  for (double a : numer) ratio *= a + k;
  for (double b : denom) ratio /= b + k;
  return ratio;
}

}  // namespace

double hyp_terminating(const std::vector<double>& numer,
                       const std::vector<double>& denom, double z) {
  const auto n = termination_index(numer);
  if (!n) {
    throw Error(ErrorCode::kInvalidParameters,
                "hyp_terminating needs a nonpositive integer numerator");
  }
  check_denominators(denom, n);
  CompensatedSum sum;
  double term = 1.0;
  for (int k = 0; k <= *n; ++k) {
    sum += term;
    term *= term_ratio(numer, denom, z, k);
  }
  return sum.value();
}

EvalResult hyp_series(const std::vector<double>& numer,
                      const std::vector<double>& denom, double z,
                      const SeriesControl& ctl) {
  ctl.validate();
  const auto n = termination_index(numer);
  check_denominators(denom, n);
  if (!n) {
    if (numer.size() > denom.size() + 1) {
      throw Error(ErrorCode::kInvalidParameters,
                  "non-terminating rFs with r > s + 1 diverges");
    }
    if (numer.size() == denom.size() + 1 && !(std::fabs(z) < 1.0)) {
      throw Error(ErrorCode::kInvalidParameters,
                  "non-terminating rFs with r == s + 1 needs |z| < 1");
    }
  }

  SeriesSummer summer(ctl);
  double term = 1.0;
  if (n) {
    for (int k = 0; k <= *n; ++k) {
      summer.add(term);
      term *= term_ratio(numer, denom, z, k);
    }
    summer.mark_exact();
    return summer.result();
  }
  for (int k = 0;; ++k) {
    if (summer.add(term)) break;
    term *= term_ratio(numer, denom, z, k);
  }
  return summer.result();
}

EvalResult hyp1f1(double a, double c, double z, const SeriesControl& ctl) {
  const bool direct_terminates = nonpositive_integer(a).has_value();
  const bool kummer_terminates = nonpositive_integer(c - a).has_value();
  const bool use_kummer =
      !direct_terminates && z < 0.0 && (kummer_terminates || z < -1.0);
  if (!use_kummer) return hyp_series({a}, {c}, z, ctl);

  EvalResult r = hyp_series({c - a}, {c}, -z, ctl);
  const double scale = std::exp(z);
  r.value *= scale;
  r.est_error *= scale;
  return r;
}

}  // namespace parabose
