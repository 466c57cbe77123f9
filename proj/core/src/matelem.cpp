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

#include "parabose/matelem.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "parabose/error.hpp"
#include "parabose/specfun.hpp"

namespace parabose {

namespace {

void check_range(int n, int k) {
  if (n < 0 || k < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "n and k must be nonnegative");
  }
  if (n > kMaxPairIndex) {
    throw Error(ErrorCode::kOutOfSupportedRange,
                "pair index " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxPairIndex));
  }
}

void require_diagonal(const MatElemQuery& q) {
  if (q.l != 0) {
    throw Error(ErrorCode::kInvalidParameters,
                "diagonal formula called with l = " + std::to_string(q.l));
  }
}

double effective(ParaParam a, Parity parity) {
  return parity == Parity::kOdd ? a.value() + 1.0 : a.value();
}

// sqrt((x)_l (y)_l) as a product of square roots of positive factors.
double sqrt_pochhammer_pair(double x, double y, int l) {
  double r = 1.0;
  for (int i = 0; i < l; ++i) r *= std::sqrt((x + i) * (y + i));
  return r;
}

}  // namespace

double MatElemQuery::effective_a() const { return effective(a, parity); }

double diag_J(const MatElemQuery& q) {
  require_diagonal(q);
  check_range(q.n, q.k);
  const double a = q.effective_a();
  const int n = q.n;
  const int k = q.k;
  CompensatedSum sum;
  for (int j = 0; j <= n && 2 * j <= k; ++j) {
    sum += factorial(2 * j) / factorial(j) * binomial(n, j) * binomial(k, 2 * j) *
           rising_factorial(a + n - j, j) * rising_factorial(a + 2 * n, k - 2 * j);
  }
  return std::pow(q.t(), k) * sum.value();
}

double diag_S(const MatElemQuery& q) {
  require_diagonal(q);
  check_range(q.n, q.k);
  const double a = q.effective_a();
  const int n = q.n;
  const int k = q.k;
  CompensatedSum sum;
  for (int j = 0; j <= std::min(n, k); ++j) {
    sum += binomial(n, j) / factorial(j) * rising_factorial(a + j, k - j) *
           rising_factorial(k + 1.0 - j, 2 * j);
  }
  return std::pow(q.t(), k) * sum.value();
}

Complex offdiag_closed(const MatElemQuery& q) {
  check_range(q.n, q.k);
  const int k = q.k;
  const int l = std::abs(q.l);
  if (l > k) return 0.0;
  const double a = q.effective_a();
  const AlphaPair alpha = AlphaPair::from(q.lambda, q.mu);
  const double sign = l % 2 == 0 ? 1.0 : -1.0;

  // For l >= 0 the ket is |2n>; for l < 0 the bra |2n-2l'> sits below it and
  // the roles of alpha+ and alpha- swap. In both cases the sum runs over the
  // lower of the two pair indices.
  int lower = q.n;
  Complex prefactor;
  if (q.l >= 0) {
    prefactor = std::pow(alpha.plus, k + l) * std::pow(alpha.minus, k - l) *
                sqrt_pochhammer_pair(q.n + 1.0, q.n + a, l);
  } else {
    lower = q.n - l;
    if (lower < 0) return 0.0;
    prefactor = std::pow(alpha.plus, k - l) * std::pow(alpha.minus, k + l) *
                sqrt_pochhammer_pair(lower + 1.0, lower + a, l);
  }
  prefactor *= sign * std::pow(2.0, k);

  CompensatedSum sum;
  for (int j = 0; j <= std::min(lower, k - l); ++j) {
    sum += rising_factorial(a + l + j, k - l - j) * rising_factorial(-lower, j) *
           rising_factorial(-k, l + j) * rising_factorial(k + l + 1.0, j) /
           (factorial(l + j) * factorial(j));
  }
  return prefactor * sum.value();
}

Complex offdiag_recurrence(const MatElemQuery& q) {
  check_range(q.n, q.k);
  const int k = q.k;
  const int bra = q.n + q.l;  // pair index of the bra, fixed by the recurrence
  if (bra < 0 || std::abs(q.l) > k) return 0.0;

  const double a = q.effective_a();
  const AlphaPair alpha = AlphaPair::from(q.lambda, q.mu);
  const Complex up = 2.0 * alpha.plus * alpha.plus;
  const Complex mid = 2.0 * alpha.plus * alpha.minus;
  const Complex down = 2.0 * alpha.minus * alpha.minus;

  // table[i] holds F_{level, bra - m}(m) for ket pair index m = lo + i.
  const int lo = std::max(0, q.n - k);
  const int hi = q.n + k;
  const int width = hi - lo + 1;
  std::vector<Complex> prev(width), cur(width);
  for (int i = 0; i < width; ++i) prev[i] = (lo + i == bra) ? 1.0 : 0.0;

  for (int level = 1; level <= k; ++level) {
    for (int i = 0; i < width; ++i) {
      const double m = lo + i;
      Complex value = mid * (2.0 * m + a) * prev[i];
      if (i + 1 < width) {
        value += up * std::sqrt((m + a) * (m + 1.0)) * prev[i + 1];
      }
      if (i > 0 && m > 0) {
        value += down * std::sqrt(m * (m + a - 1.0)) * prev[i - 1];
      }
      cur[i] = value;
    }
    std::swap(prev, cur);
  }
  return prev[q.n - lo];
}

EvalResult exp_diag_A28(int n, Parity parity, ParaParam a, double t,
                        const SeriesControl& ctl) {
  check_range(n, 0);
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::kInvalidParameters, "t must be nonnegative");
  }
  const double ae = effective(a, parity);
  EvalResult out;
  CompensatedSum sum;
  for (int j = 0; j <= n; ++j) {
    const double coef = binomial(n, j) * factorial(2 * j) *
                        rising_factorial(ae + n - j, j) /
                        (factorial(4 * j) * factorial(j)) * std::pow(t, 2 * j);
    if (coef == 0.0 && j > 0) continue;
    const EvalResult f = hyp1f1(ae + 2 * n, 2 * j + 0.5, -t / 4.0, ctl);
    sum += coef * f.value;
    out.est_error += std::fabs(coef) * f.est_error;
    out.terms_used += f.terms_used;
    out.status = combine(out.status, f.status);
  }
  out.value = sum.value();
  return out;
}

EvalResult exp_diag_A27(int n, Parity parity, ParaParam a, double t,
                        const SeriesControl& ctl) {
  check_range(n, 0);
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::kInvalidParameters, "t must be nonnegative");
  }
  const double ae = effective(a, parity);
  const double z = -t / 4.0;
  EvalResult out;
  CompensatedSum sum;
  for (int j = 0; j <= n; ++j) {
    const double coef = binomial(n, j) * (j % 2 == 0 ? 1.0 : -1.0) /
                        factorial(j) * std::pow(t, j);
    if (coef == 0.0 && j > 0) continue;
    // 2F2(A, C+j; B, C; z) with A = a+j, B = j+1/2, C = 1+j.
    const double A = ae + j;
    const double B = j + 0.5;
    const double C = 1.0 + j;
    EvalResult f;
    if (-z <= 2.0) {
      f = hyp_series({A, C + j}, {B, C}, z, ctl);
    } else {
      // Finite-sum transformation to argument -z, see specfun tests.
      CompensatedSum inner;
      for (int i = 0; i <= j; ++i) {
        const EvalResult g = hyp_series({B - A, C + j}, {B, C + i}, -z, ctl);
        const double w = binomial(j, i) * std::pow(z, i) / rising_factorial(C, i);
        inner += w * g.value;
        f.est_error += std::fabs(w) * g.est_error;
        f.terms_used += g.terms_used;
        f.status = combine(f.status, g.status);
      }
      const double scale = std::exp(z);
      f.value = scale * inner.value();
      f.est_error *= scale;
    }
    sum += coef * f.value;
    out.est_error += std::fabs(coef) * f.est_error;
    out.terms_used += f.terms_used;
    out.status = combine(out.status, f.status);
  }
  out.value = sum.value();
  return out;
}

EvalResult exp_diag_series(int n, Parity parity, ParaParam a, double t,
                           const SeriesControl& ctl) {
  check_range(n, 0);
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::kInvalidParameters, "t must be nonnegative");
  }
  ctl.validate();
  if (t == 0.0) return {1.0, 0.0, 1, Status::kExact};

  // (2k)! overflows past k = 85; the terms must have died out before that.
  constexpr int kMaxK = 85;
  SeriesSummer summer(ctl);
  MatElemQuery q{n, 0, 0, parity, a, 0.0, 1.0};
  double scale = 1.0;  // t^k / (2k)!
  for (int k = 0; k <= kMaxK; ++k) {
    q.k = k;
    const double term = (k % 2 == 0 ? 1.0 : -1.0) * diag_S(q) * scale;
    if (summer.add(term)) break;
    scale *= t / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
  }
  return summer.result();
}

}  // namespace parabose
