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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <tuple>

#include "parabose/error.hpp"
#include "parabose/specfun.hpp"
#include "property.hpp"

namespace parabose {
namespace {

using std::numbers::inv_pi;
using testing::for_all;
using testing::Gen;

PhasePoint radial(double r) { return {r, 0.0}; }

EvalResult eval(int n, double a, PhasePoint pt, Formula f = Formula::kA29,
                bool allow = false) {
  WignerQuery q;
  q.n = n;
  q.a = ParaParam(a);
  q.point = pt;
  q.formula = f;
  q.allow_unguaranteed = allow;
  return wn(q);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected parabose::Error";
  return ErrorCode::kInvalidParameters;
}

TEST(ConvergenceGuard, Examples) {
  EXPECT_EQ(convergence_guard(0, ParaParam(1.5)), Status::kExact);
  EXPECT_EQ(convergence_guard(2, ParaParam(0.8)), Status::kNotGuaranteed);
  EXPECT_EQ(convergence_guard(3, ParaParam(0.8)), Status::kConverged);
  EXPECT_EQ(convergence_guard(1, ParaParam(0.8)), Status::kConverged);
  EXPECT_EQ(convergence_guard(4, ParaParam(1.0)), Status::kNotGuaranteed);
  EXPECT_EQ(convergence_guard(4, ParaParam(1.25)), Status::kConverged);
  EXPECT_EQ(convergence_guard(7, ParaParam(2.5)), Status::kExact);
}

TEST(TerminationIndex, Formulas) {
  // a = 1/2 + m; even n = 2 nu uses m, odd n uses m + 1.
  EXPECT_EQ(termination_index(0, ParaParam(2.5)), 2);
  EXPECT_EQ(termination_index(4, ParaParam(1.5)), 1 + 4);
  EXPECT_EQ(termination_index(5, ParaParam(1.5)), 2 + 4);
  EXPECT_EQ(termination_index(4, ParaParam(1.5), Formula::kA31), 1);
  EXPECT_FALSE(termination_index(2, ParaParam(1.3)).has_value());
}

TEST(W0, Examples) {
  for_all(50, 30, [](Gen& g) {
    const PhasePoint pt{g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0)};
    EXPECT_NEAR(w0(ParaParam(0.5), pt).value, inv_pi * std::exp(-pt.r2()), 1e-15);
    EXPECT_NEAR(w0(ParaParam(1.5), pt).value, canonical_wn(1, pt), 1e-13);
  });
  EXPECT_NEAR(w0(ParaParam(1.5), radial(0.0)).value, -inv_pi, 1e-15);
}

TEST(W0, GuardRefusalAndOptIn) {
  EXPECT_EQ(code_of([] { w0(ParaParam(0.8), radial(1.0)); }),
            ErrorCode::kNotGuaranteedConvergence);
  SeriesControl ctl;
  ctl.max_terms = 2000;
  const EvalResult r = w0(ParaParam(0.8), radial(1.0), ctl, true);
  EXPECT_EQ(r.status, Status::kNotGuaranteed);
  EXPECT_TRUE(r.warning());
  EXPECT_TRUE(std::isfinite(r.value));
}

TEST(W0, ConvergedCarriesTailBound) {
  const EvalResult r = w0(ParaParam(3.3), radial(1.2));
  EXPECT_EQ(r.status, Status::kConverged);
  EXPECT_GT(r.est_error, 0.0);
  EXPECT_LT(r.est_error, 1e-8);
}

TEST(W0Polynomial, Examples) {
  EXPECT_NEAR(w0_polynomial(0, radial(1.3)).value, inv_pi * std::exp(-1.69), 1e-15);
  EXPECT_NEAR(w0_polynomial(1, radial(1.0)).value, inv_pi * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(w0_polynomial(2, radial(0.0)).value, -inv_pi / 3.0, 1e-15);
  EXPECT_EQ(w0_polynomial(3, radial(0.5)).status, Status::kExact);
  EXPECT_THROW(w0_polynomial(-1, radial(0.0)), Error);
}

TEST(W0Polynomial, MatchesSeries) {
  for_all(100, 31, [](Gen& g) {
    const int m = g.integer(0, 8);
    const PhasePoint pt{g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0)};
    const double want = w0(ParaParam::half_integer(m), pt).value;
    EXPECT_NEAR(w0_polynomial(m, pt).value, want, 1e-12);
  });
}

TEST(CanonicalWn, Examples) {
  EXPECT_NEAR(canonical_wn(0, radial(0.0)), inv_pi, 1e-16);
  EXPECT_NEAR(canonical_wn(1, radial(0.0)), -inv_pi, 1e-16);
  EXPECT_NEAR(canonical_wn(1, radial(std::sqrt(0.5))), 0.0, 1e-16);
}

TEST(Wn, ReducesToCanonicalAtHalf) {
  for_all(120, 32, [](Gen& g) {
    const int n = g.integer(0, 10);
    const PhasePoint pt{g.uniform(-2.5, 2.5), g.uniform(-2.5, 2.5)};
    EXPECT_NEAR(eval(n, 0.5, pt).value, canonical_wn(n, pt), 1e-10) << "n=" << n;
  });
}

TEST(Wn, GroundStateIsW0) {
  for (double a : {0.5, 1.5, 2.2, 4.0}) {
    for (double r : {0.0, 0.4, 1.7}) {
      EXPECT_NEAR(eval(0, a, radial(r)).value, w0(ParaParam(a), radial(r)).value, 1e-13);
    }
  }
}

TEST(Wn, RoutesAgreeForHalfIntegerA) {
  for_all(150, 33, [](Gen& g) {
    const int n = g.integer(0, 8);
    const double a = g.half_integer(4);
    const PhasePoint pt = radial(g.uniform(0.0, 4.0));
    const double a29 = eval(n, a, pt, Formula::kA29).value;
    const double a31 = eval(n, a, pt, Formula::kA31).value;
    EXPECT_LE(std::fabs(a29 - a31), 1e-9 * std::max(1.0, std::fabs(a29)))
        << "n=" << n << " a=" << a << " r=" << pt.p;
  });
}

TEST(Wn, RoutesAgreeWithinErrorEstimates) {
  // Infinite series: both routes stop early, so they need only agree to the
  // sum of their reported error bounds.
  SeriesControl ctl;
  ctl.max_terms = 400000;
  for_all(60, 38, [&](Gen& g) {
    const int n = g.integer(0, 6);
    const double a = g.uniform(2.6, 5.0);
    const PhasePoint pt = radial(g.uniform(0.0, 3.0));
    WignerQuery q;
    q.n = n;
    q.a = ParaParam(a);
    q.point = pt;
    q.ctl = ctl;
    const EvalResult a29 = wn(q);
    q.formula = Formula::kA31;
    const EvalResult a31 = wn(q);
    EXPECT_LE(std::fabs(a29.value - a31.value), a29.est_error + a31.est_error + 1e-13)
        << "n=" << n << " a=" << a << " r=" << pt.p;
  });
}

TEST(Wn, ErrorEstimateCoversTruncation) {
  // Reference: the same series pushed far past the stop rule.
  for (auto [n, a, r] : {std::tuple{5, 1.7224955113566567, 0.026327228033814612},
                         {2, 2.3, 1.1}, {0, 3.3, 0.0}}) {
    WignerQuery q;
    q.n = n;
    q.a = ParaParam(a);
    q.point = radial(r);
    const EvalResult quick = wn(q);
    ASSERT_EQ(quick.status, Status::kConverged);
    q.ctl.rel_tol = 1e-30;
    q.ctl.max_terms = 5000000;
    const EvalResult slow = wn(q);
    EXPECT_LE(std::fabs(quick.value - slow.value), quick.est_error)
        << "n=" << n << " a=" << a;
  }
}

TEST(Wn, W0MRoute) {
  for (int m = 0; m <= 4; ++m) {
    const double a = m + 0.5;
    for (double r : {0.0, 0.9, 2.0}) {
      EXPECT_NEAR(eval(0, a, radial(r), Formula::kW0M).value,
                  eval(0, a, radial(r)).value, 1e-13);
      EXPECT_NEAR(eval(1, a, radial(r), Formula::kW0M).value,
                  eval(1, a, radial(r)).value, 1e-13);
    }
  }
  EXPECT_EQ(code_of([] { eval(2, 1.5, radial(0.0), Formula::kW0M); }),
            ErrorCode::kInvalidParameters);
  EXPECT_EQ(code_of([] { eval(0, 1.3, radial(0.0), Formula::kW0M); }),
            ErrorCode::kInvalidParameters);
}

TEST(Wn, OddStateIsShiftedEven) {
  for_all(100, 34, [](Gen& g) {
    const int nu = g.integer(0, 4);
    const double a = g.coin() ? g.half_integer(3) : g.uniform(1.1, 4.0);
    const PhasePoint pt{g.uniform(-2.0, 2.0), g.uniform(-2.0, 2.0)};
    for (Formula f : {Formula::kA29, Formula::kA31}) {
      const EvalResult odd = eval(2 * nu + 1, a, pt, f);
      const EvalResult even = eval(2 * nu, a + 1.0, pt, f);
      EXPECT_EQ(odd.value, even.value);
      EXPECT_EQ(odd.terms_used, even.terms_used);
    }
  });
}

TEST(Wn, TerminatesAtPredictedIndex) {
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const ParaParam a = ParaParam::half_integer(m);
      for (Formula f : {Formula::kA29, Formula::kA31}) {
        WignerQuery q;
        q.n = n;
        q.a = a;
        q.point = radial(1.1);
        q.formula = f;
        const EvalResult r = wn(q);
        EXPECT_EQ(r.status, Status::kExact);
        EXPECT_EQ(r.terms_used, *termination_index(n, a, f) + 1);
      }
    }
  }
}

TEST(Wn, RadiallySymmetric) {
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(eval(n, 2.5, {0.75, 1.0}).value, eval(n, 2.5, radial(1.25)).value);
    EXPECT_EQ(eval(n, 2.5, {-1.5, 2.0}).value, eval(n, 2.5, {0.0, -2.5}).value);
  }
}

TEST(Wn, GuardAndRange) {
  EXPECT_EQ(code_of([] { eval(2, 0.8, radial(0.5)); }),
            ErrorCode::kNotGuaranteedConvergence);
  EXPECT_EQ(code_of([] { eval(41, 1.5, radial(0.5)); }),
            ErrorCode::kOutOfSupportedRange);
  EXPECT_NO_THROW(eval(40, 1.5, radial(0.5)));
  EXPECT_EQ(code_of([] { eval(-1, 1.5, radial(0.5)); }), ErrorCode::kIndexOutOfRange);

  WignerQuery q;
  q.n = 2;
  q.a = ParaParam(0.8);
  q.point = radial(1.0);
  q.ctl.max_terms = 3000;
  q.allow_unguaranteed = true;
  EXPECT_EQ(wn(q).status, Status::kNotGuaranteed);
}

TEST(Wn, OddStateWithSmallAConverges) {
  WignerQuery q;
  q.n = 1;
  q.a = ParaParam(0.8);
  q.point = radial(1.5);
  q.ctl.rel_tol = 1e-8;
  q.ctl.max_terms = 1000000;
  const EvalResult r = wn(q);
  EXPECT_EQ(r.status, Status::kConverged);
  EXPECT_GT(r.est_error, 0.0);
}

TEST(Wavefn, Examples) {
  EXPECT_NEAR(wavefn(0, ParaParam(0.5), 0.0).value, std::pow(std::numbers::pi, -0.25),
              1e-15);
  const WaveValue div = wavefn(0, ParaParam(0.3), 0.0);
  EXPECT_TRUE(div.divergent);
  EXPECT_TRUE(std::isinf(div.value));
  EXPECT_FALSE(wavefn(1, ParaParam(0.3), 0.0).divergent);
  EXPECT_EQ(wavefn(1, ParaParam(0.3), 0.0).value, 0.0);
}

TEST(Wavefn, CanonicalCaseIsHermite) {
  for_all(100, 35, [](Gen& g) {
    const int n = g.integer(0, 10);
    const double q = g.uniform(-4.0, 4.0);
    const double norm = 1.0 / std::sqrt(std::pow(2.0, n) * factorial(n) *
                                        std::sqrt(std::numbers::pi));
    const double want = norm * hermite(n, q) * std::exp(-q * q / 2.0);
    EXPECT_NEAR(wavefn(n, ParaParam(0.5), q).value, want, 1e-12) << "n=" << n;
  });
}

TEST(Wavefn, ParityUnderReflection) {
  for_all(100, 36, [](Gen& g) {
    const int n = g.integer(0, 9);
    const double a = g.uniform(0.6, 4.0);
    const double q = g.uniform(0.05, 4.0);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    EXPECT_EQ(wavefn(n, ParaParam(a), -q).value, sign * wavefn(n, ParaParam(a), q).value);
  });
}

TEST(WaveEq, ResidualExamples) {
  EXPECT_LE(std::fabs(waveeq_residual(0, ParaParam(0.5), 1.0)), 1e-6);
  EXPECT_LE(std::fabs(waveeq_residual(2, ParaParam(1.5), 0.8)), 1e-6);
  EXPECT_LE(std::fabs(waveeq_residual(1, ParaParam(2.5), -1.3)), 1e-6);
  EXPECT_EQ(code_of([] { waveeq_residual(0, ParaParam(1.0), 0.0); }),
            ErrorCode::kInvalidParameters);
}

TEST(WaveEq, ResidualVanishesOffOrigin) {
  for_all(120, 37, [](Gen& g) {
    const int n = g.integer(0, 4);
    const double a = g.pick(std::vector<double>{0.7, 1.5, 2.5});
    const double q = (g.coin() ? 1.0 : -1.0) * g.uniform(0.3, 3.0);
    EXPECT_LE(std::fabs(waveeq_residual(n, ParaParam(a), q)), 1e-6)
        << "n=" << n << " a=" << a << " q=" << q;
  });
}

}  // namespace
}  // namespace parabose
