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

#include "parabose/wigner.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "parabose/error.hpp"
#include "parabose/matelem.hpp"
#include "parabose/specfun.hpp"

namespace parabose {

namespace {

constexpr double kInvPi = std::numbers::inv_pi;

bool is_odd(int n) { return n % 2 != 0; }

void require_guard(Status guard, bool allow, int n, ParaParam a) {
  if (guard == Status::kNotGuaranteed && !allow) {
    throw Error(ErrorCode::kNotGuaranteedConvergence,
                "series for n = " + std::to_string(n) +
                    ", a = " + std::to_string(a.value()) +
                    " is not known to converge; opt in to evaluate anyway");
  }
}

// Raabe-type majorant of the remaining tail, using |L_k(t)| <= e^{t/2}:
// terms decaying like k^{-s} with s = a_eff leave about c_K K / (s - 1).
double majorant_tail(double last_coef, std::int64_t k, double a_eff, double t) {
  if (a_eff <= 1.0) return std::numeric_limits<double>::infinity();
  return std::fabs(last_coef) * std::exp(t / 2.0) * static_cast<double>(k) /
         (a_eff - 1.0);
}

EvalResult finish(SeriesSummer& summer, double t, double last_coef,
                  double a_eff, bool terminating) {
  if (terminating) summer.mark_exact();
  EvalResult r = summer.result();
  // Also when max_terms was hit: the streak estimate says nothing about the
  // tail of a slowly decaying series.
  if (r.status != Status::kExact && a_eff > 1.0) {
    r.est_error = std::max(r.est_error,
                           majorant_tail(last_coef, r.terms_used, a_eff, t));
  }
  const double scale = kInvPi * std::exp(-t);
  r.value *= scale;
  r.est_error *= scale;
  return r;
}

// Even-state W_{2 nu} by the single-Laguerre expansion. The j-sum is folded
// into each k-term: term_k = (c)_k/(1/2)_k L_k(t) sum_{2j<=k} pref_j k!/(k-2j)!.
EvalResult even_a29(int nu, double a, double t, const SeriesControl& ctl,
                    std::optional<int> last_k) {
  const double c = 0.5 - a - 2.0 * nu;
  std::vector<double> pref(nu + 1);
  for (int j = 0; j <= nu; ++j) {
    pref[j] = binomial(nu, j) * rising_factorial(a + nu - j, j) /
              (factorial(j) * rising_factorial(c, 2 * j));
  }
  std::vector<double> falling(nu + 1, 0.0);  // k!/(k-2j)!

  SeriesSummer summer(ctl);
  LaguerreSequence lag(0.0, t);
  double ratio = 1.0;  // (c)_k / (1/2)_k
  double coef = 0.0;
  for (int k = 0;; ++k) {
    if (k % 2 == 0 && k / 2 <= nu) falling[k / 2] = factorial(k);
    CompensatedSum inner;
    for (int j = 0; j <= nu && 2 * j <= k; ++j) inner += pref[j] * falling[j];
    coef = ratio * inner.value();
    const bool stop = summer.add(coef * lag.value());
    if (last_k ? k == *last_k : stop) break;

    ratio *= (c + k) / (0.5 + k);
    for (int j = 0; j <= nu && 2 * j <= k; ++j) {
      falling[j] *= (k + 1.0) / (k + 1.0 - 2 * j);
    }
    lag.advance();
  }
  return finish(summer, t, coef, a, last_k.has_value());
}

// Even-state W_{2 nu} by the generalized-Laguerre expansion.
EvalResult even_a31(int nu, double a, double t, const SeriesControl& ctl,
                    std::optional<int> last_k) {
  std::vector<double> pref(nu + 1);
  std::vector<double> coef(nu + 1, 1.0);
  std::vector<LaguerreSequence> lag;
  lag.reserve(nu + 1);
  for (int j = 0; j <= nu; ++j) {
    pref[j] = binomial(nu, j) * rising_factorial(j + 1.0, j) /
              rising_factorial(0.5, j);
    lag.emplace_back(-static_cast<double>(j), t);
    while (lag[j].degree() < 2 * j) lag[j].advance();
  }

  // |L^{(-j)}_{k+2j}(t)| <= t^j/j! * e^{t/2} / (k+1)_j, so each j-term is
  // bounded by a sequence decaying like k^{-a}; `bound` tracks the t^j/j!
  // /(k+1)_j factor.
  std::vector<double> bound(nu + 1);
  for (int j = 0; j <= nu; ++j) bound[j] = std::pow(t, j) / factorial(j);

  SeriesSummer summer(ctl);
  double last_coef = 0.0;
  for (int k = 0;; ++k) {
    CompensatedSum term;
    double magnitude = 0.0;
    for (int j = 0; j <= nu; ++j) {
      term += pref[j] * coef[j] * lag[j].value();
      magnitude += std::fabs(pref[j] * coef[j]) * bound[j];
    }
    last_coef = magnitude;
    const bool stop = summer.add(term.value());
    if (last_k ? k == *last_k : stop) break;

    for (int j = 0; j <= nu; ++j) {
      coef[j] *= (0.5 - a + k) * (2.0 * j + 1.0 + k) / ((k + 1.0) * (0.5 + j + k));
      bound[j] *= (k + 1.0) / (k + 1.0 + j);
      lag[j].advance();
    }
  }
  return finish(summer, t, last_coef, a, last_k.has_value());
}

}  // namespace

Status convergence_guard(int n, ParaParam a) {
  if (n < 0) throw Error(ErrorCode::kIndexOutOfRange, "n must be >= 0");
  if (a.is_half_integer()) return Status::kExact;
  const double effective = is_odd(n) ? a.value() + 1.0 : a.value();
  return effective > 1.0 ? Status::kConverged : Status::kNotGuaranteed;
}

std::optional<int> termination_index(int n, ParaParam a, Formula formula) {
  if (!a.is_half_integer()) return std::nullopt;
  const int m = *a.half_integer_m() + (is_odd(n) ? 1 : 0);
  return formula == Formula::kA29 ? m + 2 * (n / 2) : m;
}

EvalResult w0(ParaParam a, PhasePoint point, const SeriesControl& ctl,
              bool allow_unguaranteed) {
  ctl.validate();
  const Status guard = convergence_guard(0, a);
  require_guard(guard, allow_unguaranteed, 0, a);
  const double t = point.r2();
  const std::optional<int> last_k = a.half_integer_m();

  SeriesSummer summer(ctl);
  LaguerreSequence lag(0.0, t);
  double ratio = 1.0;  // (1/2-a)_k / (1/2)_k
  for (int k = 0;; ++k) {
    const bool stop = summer.add(ratio * lag.value());
    if (last_k ? k == *last_k : stop) break;
    ratio *= (0.5 - a.value() + k) / (0.5 + k);
    lag.advance();
  }
  EvalResult r = finish(summer, t, ratio, a.value(), last_k.has_value());
  if (guard == Status::kNotGuaranteed) r.status = Status::kNotGuaranteed;
  return r;
}

EvalResult w0_polynomial(int m, PhasePoint point) {
  if (m < 0) throw Error(ErrorCode::kInvalidParameters, "m must be >= 0");
  const double t = point.r2();
  const double c = 1.5 - m;
  if (nonpositive_integer(c)) {
    throw Error(ErrorCode::kInvalidParameters, "3/2 - m is a pole");
  }
  const EvalResult f = hyp_series({-static_cast<double>(m)}, {c}, t);
  const double scale = kInvPi * std::exp(-t) / (1.0 - 2.0 * m);
  return {scale * f.value, std::fabs(scale) * f.est_error, f.terms_used,
          Status::kExact};
}

EvalResult wn(const WignerQuery& query) {
  query.ctl.validate();
  const int n = query.n;
  if (n < 0) throw Error(ErrorCode::kIndexOutOfRange, "n must be >= 0");
  const int nu = n / 2;
  if (n > kMaxPairIndex) {
    throw Error(ErrorCode::kOutOfSupportedRange,
                "state index " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxPairIndex));
  }
  const Status guard = convergence_guard(n, query.a);
  require_guard(guard, query.allow_unguaranteed, n, query.a);

  // Odd states: W_{2nu+1}(a) = W_{2nu}(a+1). Everything below is even-only.
  const ParaParam a = is_odd(n) ? query.a.shifted() : query.a;
  const double t = query.point.r2();

  EvalResult r;
  switch (query.formula) {
    case Formula::kA29:
      r = even_a29(nu, a.value(), t, query.ctl,
                   termination_index(2 * nu, a, Formula::kA29));
      break;
    case Formula::kA31:
      r = even_a31(nu, a.value(), t, query.ctl,
                   termination_index(2 * nu, a, Formula::kA31));
      break;
    case Formula::kW0M:
      if (nu != 0 || !a.is_half_integer()) {
        throw Error(ErrorCode::kInvalidParameters,
                    "W0M needs n in {0, 1} and half-integer a");
      }
      r = w0_polynomial(*a.half_integer_m(), query.point);
      break;
  }
  if (guard == Status::kNotGuaranteed) r.status = Status::kNotGuaranteed;
  return r;
}

double canonical_wn(int n, PhasePoint point) {
  if (n < 0) throw Error(ErrorCode::kIndexOutOfRange, "n must be >= 0");
  const double t = point.r2();
  const double sign = is_odd(n) ? -1.0 : 1.0;
  return sign * kInvPi * std::exp(-t) * laguerre_gen(n, 0.0, 2.0 * t);
}

WaveValue wavefn(int n, ParaParam a, double q) {
  if (n < 0) throw Error(ErrorCode::kIndexOutOfRange, "n must be >= 0");
  const int nu = n / 2;
  const double av = a.value();
  const double sign = nu % 2 == 0 ? 1.0 : -1.0;
  const double q2 = q * q;
  const double gaussian = std::exp(-q2 / 2.0);
  if (!is_odd(n)) {
    const double norm =
        std::exp(0.5 * (std::lgamma(nu + 1.0) - std::lgamma(nu + av)));
    const double power = std::pow(std::fabs(q), av - 0.5);
    const double value =
        sign * norm * power * gaussian * laguerre_gen(nu, av - 1.0, q2);
    return {value, std::isinf(value)};
  }
  const double norm =
      std::exp(0.5 * (std::lgamma(nu + 1.0) - std::lgamma(nu + av + 1.0)));
  // q |q|^{a-1/2}, written so that q = 0 gives 0 for every a > 0.
  const double odd_power = std::copysign(std::pow(std::fabs(q), av + 0.5), q);
  return {sign * norm * odd_power * gaussian * laguerre_gen(nu, av, q2), false};
}

double waveeq_residual(int n, ParaParam a, double q) {
  if (q == 0.0) {
    throw Error(ErrorCode::kInvalidParameters, "residual needs q != 0");
  }
  const double g = is_odd(n) ? a.value() + 0.5 : a.value() - 0.5;
  const double energy = n + a.value();
  const double h = 1e-4 * std::max(1.0, std::fabs(q));
  const double psi = wavefn(n, a, q).value;
  const double second = (wavefn(n, a, q + h).value - 2.0 * psi +
                         wavefn(n, a, q - h).value) /
                        (h * h);
  return -0.5 * second + 0.5 * q * q * psi + 0.5 * g * (g - 1.0) * psi / (q * q) -
         energy * psi;
}

}  // namespace parabose
