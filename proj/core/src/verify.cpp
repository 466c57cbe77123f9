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

#include "parabose/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <random>

#include "parabose/fock.hpp"
#include "parabose/matelem.hpp"
#include "parabose/oracle.hpp"
#include "parabose/specfun.hpp"
#include "parabose/wigner.hpp"

namespace parabose::verify {

namespace {

// Tracks the worst error seen by one check.
class Tracker {
 public:
  void observe(double err) {
    if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
    worst_ = std::max(worst_, err);
  }
  double worst() const { return worst_; }

 private:
  double worst_ = 0.0;
};

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

double rel_err(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

CheckResult run_check(std::string name, double tolerance,
                      const std::function<void(Tracker&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  Tracker tracker;
  try {
    body(tracker);
    r.max_error = tracker.worst();
    r.passed = r.max_error <= tolerance;
  } catch (const std::exception& e) {
    r.max_error = std::numeric_limits<double>::infinity();
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

// rFs summed directly, with no transformation applied.
double direct(const std::vector<double>& numer, const std::vector<double>& denom,
              double z) {
  SeriesControl ctl;
  ctl.rel_tol = 1e-17;
  ctl.max_terms = 5000;
  return hyp_series(numer, denom, z, ctl).value;
}

// Identity checks compare values at points where double precision can deliver
// the tolerance: the cancellation factor sum|terms| / |value| must stay below
// this bound. Exact zeros of the polynomials are excluded the same way.
constexpr double kMaxCondition = 1e4;

// sum_k |term_k| of rFs(numer; denom; z).
double abs_term_sum(const std::vector<double>& numer,
                    const std::vector<double>& denom, double z) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 0; k < 5000 && term != 0.0; ++k) {
    sum += std::fabs(term);
    if (std::fabs(term) < 1e-18 * sum) break;
    double ratio = z / (k + 1.0);
    for (double a : numer) ratio *= a + k;
    for (double b : denom) ratio /= b + k;
    term *= ratio;
  }
  return sum;
}

bool well_conditioned(double abs_sum, double value) {
  return abs_sum <= kMaxCondition * std::fabs(value);
}

void specfun_checks(std::vector<CheckResult>& out) {
  out.push_back(run_check("pochhammer_recurrence", 0.0, [](Tracker& t) {
    for (double x : {-7.5, -2.0, -0.3, 0.0, 0.5, 1.0, 2.7, 11.25}) {
      for (int k = 0; k < 60; ++k) {
        t.observe(rel_err(rising_factorial(x, k + 1),
                          rising_factorial(x, k) * (x + k)));
      }
    }
  }));
  out.push_back(run_check("double_factorial_identity", 1e-14, [](Tracker& t) {
    for (int k = 0; k <= 20; ++k) {
      t.observe(rel_err(rising_factorial(0.5, k) * factorial(k) * std::pow(4.0, k),
                        factorial(2 * k)));
    }
  }));
  out.push_back(run_check("chu_vandermonde", 1e-10, [](Tracker& t) {
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> n_dist(0, 10);
    std::uniform_real_distribution<double> a_dist(-3.0, 3.0);
    std::uniform_real_distribution<double> c_dist(0.25, 5.0);
    for (int accepted = 0; accepted < 200;) {
      const double n = n_dist(rng);
      const double a = a_dist(rng);
      const double c = c_dist(rng);
      const double rhs = rising_factorial(c - a, static_cast<int>(n)) /
                         rising_factorial(c, static_cast<int>(n));
      if (!well_conditioned(abs_term_sum({-n, a}, {c}, 1.0), rhs)) continue;
      ++accepted;
      t.observe(rel_err(hyp_terminating({-n, a}, {c}, 1.0), rhs));
    }
  }));
  out.push_back(run_check("binomial_theorem", 1e-10, [](Tracker& t) {
    for (double a = -2.75; a <= 3.0; a += 0.5) {
      for (double z = -0.5; z <= 0.5; z += 0.125) {
        t.observe(rel_err(direct({a}, {}, z), std::pow(1.0 - z, -a)));
      }
    }
  }));
  out.push_back(run_check("kummer_transform", 1e-10, [](Tracker& t) {
    for (double b = -3.0; b <= 3.0; b += 0.5) {
      for (double c = -3.0; c <= 3.0; c += 0.5) {
        if (nonpositive_integer(c)) continue;
        for (double z = -5.0; z <= 5.0; z += 1.0) {
          const double lhs = direct({b}, {c}, z);
          const double rhs = std::exp(z) * direct({c - b}, {c}, -z);
          if (!well_conditioned(abs_term_sum({b}, {c}, z), lhs) ||
              !well_conditioned(std::exp(z) * abs_term_sum({c - b}, {c}, -z),
                                rhs)) {
            continue;
          }
          t.observe(rel_err(lhs, rhs));
        }
      }
    }
  }));
  out.push_back(run_check("laguerre_lag_vs_lag_gen", 1e-12, [](Tracker& t) {
    for (int n = 0; n <= 12; ++n) {
      for (double alpha : {0.0, 0.5, 1.0, 2.5, 4.0}) {
        for (double z : {0.0, 0.1, 0.75, 2.0}) {
          const double lag = rising_factorial(alpha + 1.0, n) / factorial(n) *
                             hyp_terminating({-static_cast<double>(n)},
                                             {alpha + 1.0}, z);
          t.observe(rel_err(laguerre_gen(n, alpha, z), lag));
        }
      }
    }
  }));
  out.push_back(run_check("laguerre_alternating_sum", 1e-10, [](Tracker& t) {
    for (int n = 0; n <= 6; ++n) {
      for (int r = 0; r <= 6; ++r) {
        for (double alpha : {0.0, 0.5, 1.0, 2.25}) {
          for (double z : {0.3, 1.7, 4.2}) {
            CompensatedSum lhs;
            double scale = 0.0;
            for (int k = 0; k <= n; ++k) {
              const double term = (k % 2 == 0 ? 1.0 : -1.0) * binomial(n, k) *
                                  laguerre_gen(r + k, alpha, z);
              lhs += term;
              scale += std::fabs(term);
            }
            const double rhs =
                (n % 2 == 0 ? 1.0 : -1.0) * laguerre_gen(r + n, alpha - n, z);
            if (!well_conditioned(scale, rhs)) continue;
            t.observe(rel_err(lhs.value(), rhs));
          }
        }
      }
    }
  }));
  out.push_back(run_check("laguerre_bound", 0.0, [](Tracker& t) {
    for (double x = 0.0; x <= 25.0; x += 0.25) {
      LaguerreSequence seq(0.0, x);
      for (int k = 0; k <= 50; ++k, seq.advance()) {
        t.observe(std::max(0.0, std::fabs(seq.value()) - std::exp(x / 2.0)));
      }
    }
  }));
  out.push_back(run_check("hermite_summation", 1e-10, [](Tracker& t) {
    for (int k = 0; k <= 8; ++k) {
      for (auto [x, y] : {std::pair{0.3, -0.8}, {1.1, 0.4}, {-1.7, 2.0}}) {
        CompensatedSum lhs;
        for (int j = 0; j <= k; ++j) {
          lhs += binomial(k, j) * hermite(2 * j, x) * hermite(2 * k - 2 * j, y);
        }
        const double rhs = (k % 2 == 0 ? 1.0 : -1.0) * factorial(k) *
                           std::pow(4.0, k) * laguerre_gen(k, 0.0, x * x + y * y);
        t.observe(rel_err(lhs.value(), rhs));
      }
    }
  }));
  out.push_back(run_check("paris_transform", 1e-10, [](Tracker& t) {
    for (int j = 0; j <= 4; ++j) {
      for (double a : {0.7, 1.5, 2.3}) {
        for (double b : {0.5, 1.5, 2.75}) {
          for (double c : {1.0, 2.0, 3.5}) {
            for (double z : {-3.0, -1.0, 0.5, 2.0}) {
              const double lhs = direct({a, c + j}, {b, c}, z);
              CompensatedSum sum;
              double scale = 0.0;
              for (int k = 0; k <= j; ++k) {
                const double w = binomial(j, k) * std::pow(z, k) /
                                 rising_factorial(c, k);
                sum += w * direct({b - a, c + j}, {b, c + k}, -z);
                scale += std::fabs(w) * abs_term_sum({b - a, c + j}, {b, c + k}, -z);
              }
              const double rhs = std::exp(z) * sum.value();
              if (!well_conditioned(abs_term_sum({a, c + j}, {b, c}, z), lhs) ||
                  !well_conditioned(std::exp(z) * scale, rhs)) {
                continue;
              }
              t.observe(rel_err(lhs, rhs));
            }
          }
        }
      }
    }
  }));
}

void matelem_checks(std::vector<CheckResult>& out) {
  out.push_back(run_check("diag_J_equals_diag_S", 1e-10, [](Tracker& t) {
    for (double a : {0.3, 0.5, 1.5, 2.5, std::numbers::pi / 2}) {
      for (double tt : {0.25, 1.0, 4.0}) {
        for (Parity parity : {Parity::kEven, Parity::kOdd}) {
          for (int n = 0; n <= 12; ++n) {
            for (int k = 0; k <= 12; ++k) {
              const MatElemQuery q{n, k, 0, parity, ParaParam(a), 0.0,
                                   std::sqrt(tt)};
              t.observe(rel_err(diag_J(q), diag_S(q)));
            }
          }
        }
      }
    }
  }));
  out.push_back(run_check("closed_forms_equal_fock_oracle", 1e-10, [](Tracker& t) {
    const double lambda = 0.6;
    const double mu = -0.8;
    for (double a : {0.3, 0.7, 1.5, 2.5}) {
      const TruncatedRep rep = build_rep(ParaParam(a), exact_dim(12, 2 * 12 + 1, 2 * 6 + 1));
      for (Parity parity : {Parity::kEven, Parity::kOdd}) {
        for (int n = 0; n <= 6; ++n) {
          for (int k = 0; k <= 6; ++k) {
            for (int l = -k; l <= k; ++l) {
              const MatElemQuery q{n, k, l, parity, ParaParam(a), lambda, mu};
              if (q.bra_state() < 0) continue;
              const Complex oracle = matrix_power_element(
                  rep, lambda, mu, 2 * k, q.bra_state(), q.ket_state());
              t.observe(rel_err(offdiag_closed(q), oracle));
              if (l == 0) {
                t.observe(rel_err(Complex(diag_J(q)), oracle));
                t.observe(rel_err(Complex(diag_S(q)), oracle));
              }
            }
          }
        }
      }
    }
  }));
  out.push_back(run_check("offdiag_closed_equals_recurrence", 1e-10, [](Tracker& t) {
    for (double a : {0.7, 1.5, 2.5}) {
      for (Parity parity : {Parity::kEven, Parity::kOdd}) {
        for (int n = 0; n <= 6; ++n) {
          for (int k = 0; k <= 6; ++k) {
            for (int l = -k; l <= k; ++l) {
              const MatElemQuery q{n, k, l, parity, ParaParam(a), 0.9, 0.35};
              t.observe(rel_err(offdiag_closed(q), offdiag_recurrence(q)));
            }
          }
        }
      }
    }
  }));
  out.push_back(run_check("offdiag_closed_satisfies_recurrence", 1e-10, [](Tracker& t) {
    const double lambda = -0.4;
    const double mu = 1.1;
    const AlphaPair alpha = AlphaPair::from(lambda, mu);
    for (double a : {0.3, 1.5}) {
      const ParaParam pa(a);
      auto f = [&](int k, int l, int n) -> Complex {
        if (n < 0) return 0.0;
        return offdiag_closed({n, k, l, Parity::kEven, pa, lambda, mu});
      };
      for (int k = 1; k <= 8; ++k) {
        for (int n = 0; n <= 6; ++n) {
          for (int l = -k - 1; l <= k + 1; ++l) {
            if (n + l < 0) continue;
            Complex rhs = 2.0 * alpha.plus * alpha.plus *
                              std::sqrt((n + a) * (n + 1.0)) * f(k - 1, l - 1, n + 1) +
                          2.0 * alpha.plus * alpha.minus * (2.0 * n + a) * f(k - 1, l, n);
            if (n > 0) {
              rhs += 2.0 * alpha.minus * alpha.minus * std::sqrt(n * (n + a - 1.0)) *
                     f(k - 1, l + 1, n - 1);
            }
            const Complex lhs = f(k, l, n);
            const double scale = std::max(std::abs(lhs), std::abs(rhs));
            t.observe(scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale);
          }
        }
      }
    }
  }));
  out.push_back(run_check("odd_parity_shift", 1e-10, [](Tracker& t) {
    for (double a : {0.3, 0.7, 1.5}) {
      const int dim = exact_dim(12, 2 * 12 + 1, 2 * 6 + 1);
      const TruncatedRep rep(ParaParam(a), dim);
      const TruncatedRep shifted(ParaParam(a + 1.0), dim);
      for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= 6; ++k) {
          for (int l = -k; l <= k; ++l) {
            if (n + l < 0) continue;
            const Complex odd = matrix_power_element(rep, 0.5, 0.5, 2 * k,
                                                     2 * (n + l) + 1, 2 * n + 1);
            const Complex even = matrix_power_element(shifted, 0.5, 0.5, 2 * k,
                                                      2 * (n + l), 2 * n);
            t.observe(rel_err(odd, even));
          }
        }
      }
    }
  }));
  // |<n|e^{iX}|n>| <= 1, so the error is measured against max(1, |value|).
  out.push_back(run_check("exp_diag_routes_agree", 1e-10, [](Tracker& t) {
    for (double a : {0.7, 1.5, 2.5}) {
      for (Parity parity : {Parity::kEven, Parity::kOdd}) {
        for (int n = 0; n <= 4; ++n) {
          for (double tt : {0.0, 0.5, 1.0, 3.0, 6.0}) {
            const ParaParam pa(a);
            const double a28 = exp_diag_A28(n, parity, pa, tt).value;
            const double a27 = exp_diag_A27(n, parity, pa, tt).value;
            const double series = exp_diag_series(n, parity, pa, tt).value;
            const double scale = std::max(1.0, std::fabs(a28));
            t.observe(std::fabs(a28 - a27) / scale);
            t.observe(std::fabs(a28 - series) / scale);
            if (tt == 0.0) t.observe(std::fabs(a28 - 1.0));
          }
        }
      }
    }
  }));
}

double rel_to_gaussian(double got, double want, double r2) {
  const double scale = std::max(std::fabs(want), std::exp(-r2) / std::numbers::pi);
  return std::fabs(got - want) / scale;
}

void wigner_checks(std::vector<CheckResult>& out) {
  out.push_back(run_check("canonical_reduction", 1e-9, [](Tracker& t) {
    for (int n = 0; n <= 10; ++n) {
      for (int i = 0; i <= 32; ++i) {
        const PhasePoint point{std::sqrt(0.5 * i), 0.0};
        WignerQuery q;
        q.n = n;
        q.point = point;
        t.observe(std::fabs(wn(q).value - canonical_wn(n, point)));
      }
    }
  }));
  out.push_back(run_check("route_equivalence_a29_a31", 1e-9, [](Tracker& t) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 8; ++n) {
        for (double r2 : {0.0, 0.5, 1.0, 4.0, 9.0, 16.0}) {
          WignerQuery q;
          q.n = n;
          q.a = ParaParam::half_integer(m);
          q.point = {std::sqrt(r2), 0.0};
          const double a29 = wn(q).value;
          q.formula = Formula::kA31;
          const double a31 = wn(q).value;
          t.observe(std::fabs(a29 - a31) / std::max(1.0, std::fabs(a29)));
        }
      }
    }
  }));
  out.push_back(run_check("ground_state_coincidence", 1e-12, [](Tracker& t) {
    for (int i = 0; i <= 64; ++i) {
      const PhasePoint point{4.0 * i / 64.0, 0.0};
      t.observe(rel_to_gaussian(w0(ParaParam(1.5), point).value,
                                canonical_wn(1, point), point.r2()));
    }
  }));
  out.push_back(run_check("w0_polynomial_equals_w0", 1e-12, [](Tracker& t) {
    for (int m = 0; m <= 4; ++m) {
      for (int i = 0; i <= 32; ++i) {
        const PhasePoint point{0.125 * i, 0.0};
        t.observe(rel_to_gaussian(w0_polynomial(m, point).value,
                                  w0(ParaParam::half_integer(m), point).value,
                                  point.r2()));
      }
    }
  }));
  out.push_back(run_check("odd_shift_structural", 0.0, [](Tracker& t) {
    for (double a : {0.5, 1.5, 2.5, 3.7}) {
      for (int nu = 0; nu <= 4; ++nu) {
        for (double r : {0.0, 0.7, 1.9}) {
          WignerQuery odd;
          odd.n = 2 * nu + 1;
          odd.a = ParaParam(a);
          odd.point = {r, 0.0};
          WignerQuery even = odd;
          even.n = 2 * nu;
          even.a = ParaParam(a + 1.0);
          t.observe(std::fabs(wn(odd).value - wn(even).value));
        }
      }
    }
  }));
  out.push_back(run_check("radial_invariance", 0.0, [](Tracker& t) {
    // Dyadic points whose p^2 + q^2 is exact, so (p, q) and (r, 0) feed the
    // formulas the same r^2.
    const std::vector<std::pair<PhasePoint, PhasePoint>> pairs = {
        {{0.75, 1.0}, {1.25, 0.0}},
        {{-0.375, 0.5}, {0.625, 0.0}},
        {{1.5, -2.0}, {2.5, 0.0}},
    };
    for (int n = 0; n <= 6; ++n) {
      for (const auto& [point, radial] : pairs) {
        WignerQuery q;
        q.n = n;
        q.a = ParaParam(2.5);
        q.point = point;
        const double w = wn(q).value;
        q.point = radial;
        t.observe(std::fabs(w - wn(q).value));
        q.point = {point.q, point.p};
        t.observe(std::fabs(w - wn(q).value));
      }
    }
  }));
  out.push_back(run_check("terminating_series_index", 0.0, [](Tracker& t) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 8; ++n) {
        for (Formula formula : {Formula::kA29, Formula::kA31}) {
          WignerQuery q;
          q.n = n;
          q.a = ParaParam::half_integer(m);
          q.point = {1.3, 0.0};
          q.formula = formula;
          const EvalResult r = wn(q);
          const int expected = *termination_index(n, q.a, formula) + 1;
          t.observe(r.status == Status::kExact ? 0.0 : 1.0);
          t.observe(std::fabs(static_cast<double>(r.terms_used - expected)));
        }
      }
    }
  }));
  out.push_back(run_check("wavefn_orthonormality", 1e-8, [](Tracker& t) {
    for (double a : {0.7, 1.5, 2.5}) {
      for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
          t.observe(std::fabs(wavefn_overlap(m, n, ParaParam(a)) -
                              (m == n ? 1.0 : 0.0)));
        }
      }
    }
  }));
  out.push_back(run_check("waveeq_residual", 1e-6, [](Tracker& t) {
    for (double a : {0.5, 0.7, 1.5, 2.5}) {
      for (int n = 0; n <= 4; ++n) {
        for (double q : {-1.3, -0.4, 0.8, 1.0, 2.2}) {
          t.observe(std::fabs(waveeq_residual(n, ParaParam(a), q)));
        }
      }
    }
  }));
}

void oracle_checks(std::vector<CheckResult>& out) {
  for (int k = 0; k <= 3; ++k) {
    out.push_back(run_check("appendixA_integral_k" + std::to_string(k), 1e-8,
                            [k](Tracker& t) {
                              for (auto [p, q] : {std::pair{0.0, 0.0},
                                                  {0.5, 0.0},
                                                  {1.0, -1.0},
                                                  {2.0, 1.0}}) {
                                t.observe(integral_appA_check(k, p, q).abs_diff);
                              }
                            }));
  }
  out.push_back(run_check("defining_integral_round_trip", 1e-7, [](Tracker& t) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 6; ++n) {
        for (double r2 : {0.0, 1.0, 4.0}) {
          WignerQuery q;
          q.n = n;
          q.a = ParaParam::half_integer(m);
          q.point = {std::sqrt(r2), 0.0};
          t.observe(std::fabs(wigner_quadrature(n, q.a, q.point).value -
                              wn(q).value));
        }
      }
    }
  }));
  out.push_back(run_check("normalization", 1e-8, [](Tracker& t) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 4; ++n) {
        t.observe(std::fabs(normalization(n, ParaParam::half_integer(m)).value - 1.0));
      }
    }
  }));
  out.push_back(run_check("energy_moment", 1e-7, [](Tracker& t) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const ParaParam a = ParaParam::half_integer(m);
        t.observe(std::fabs(energy_moment(n, a).value - (n + a.value())));
      }
    }
  }));
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::kAll;
  if (name == "specfun") return Suite::kSpecfun;
  if (name == "matelem") return Suite::kMatelem;
  if (name == "wigner") return Suite::kWigner;
  if (name == "oracle") return Suite::kOracle;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::kAll:
      return "all";
    case Suite::kSpecfun:
      return "specfun";
    case Suite::kMatelem:
      return "matelem";
    case Suite::kWigner:
      return "wigner";
    case Suite::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::vector<CheckResult> run_suite(Suite suite) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kSpecfun) specfun_checks(out);
  if (all || suite == Suite::kMatelem) matelem_checks(out);
  if (all || suite == Suite::kWigner) wigner_checks(out);
  if (all || suite == Suite::kOracle) oracle_checks(out);
  return out;
}

}  // namespace parabose::verify
