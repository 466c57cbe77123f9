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

#include <optional>
#include <vector>

#include "parabose/series.hpp"

// Scalar special-function kernels: rising factorials, binomials, Laguerre and
// Hermite polynomials and the hypergeometric families rFs used throughout.

namespace parabose {

/// (x)_k = x (x+1) ... (x+k-1), by iterated product. (x)_0 == 1 exactly.
double rising_factorial(double x, int k);

/// k! as a double; overflows to +inf past 170!.
double factorial(int k);

/// Binomial coefficient C(n, k) for 0 <= k <= n, zero otherwise.
double binomial(int n, int k);

/// If x is a nonpositive integer -N, returns N.
std::optional<int> nonpositive_integer(double x);

/// Generalized Laguerre polynomial L_n^{(alpha)}(z), extended to every real
/// alpha (negative integers included) via
///   L_n^{(alpha)}(z) = (1/n!) sum_k (-n)_k (alpha+k+1)_{n-k} z^k / k!.
/// Evaluated with the three-term recurrence, which is a polynomial identity in
/// alpha and therefore holds for the extended definition as well.
double laguerre_gen(int n, double alpha, double z);

/// Streams L_0^{(alpha)}(z), L_1^{(alpha)}(z), ... one degree at a time.
class LaguerreSequence {
 public:
  LaguerreSequence(double alpha, double z);

  int degree() const { return degree_; }
  double value() const { return current_; }
  void advance();

 private:
  double alpha_;
  double z_;
  int degree_ = 0;
  double previous_ = 0.0;
  double current_ = 1.0;
};

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

/// Finite rFs sum. Some numerator parameter must be a nonpositive integer -N;
/// the N+1 terms are accumulated with compensated summation.
/// Throws Error(kInvalidParameters) if no numerator terminates the series or
/// a denominator Pochhammer vanishes at or before term N.
double hyp_terminating(const std::vector<double>& numer,
                       const std::vector<double>& denom, double z);

/// Direct summation of rFs(numer; denom; z). Terminating series are summed
/// exactly (status Exact); otherwise the SeriesControl stop rule applies.
/// Requires r <= s + 1, and |z| < 1 when r == s + 1 and the series does not
/// terminate.
EvalResult hyp_series(const std::vector<double>& numer,
                      const std::vector<double>& denom, double z,
                      const SeriesControl& ctl = {});

/// Confluent hypergeometric 1F1(a; c; z).
///
/// For z < -1, or whenever c - a is a nonpositive integer and z < 0, the
/// value is obtained as e^z 1F1(c-a; c; -z) so that the summed series has
/// no cancellation; otherwise the series is summed directly.
EvalResult hyp1f1(double a, double c, double z, const SeriesControl& ctl = {});

}  // namespace parabose
