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

#include <gtest/gtest.h>

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "parabose/error.hpp"
#include "parabose/specfun.hpp"
#include "property.hpp"

namespace parabose {
namespace {

using testing::for_all;
using testing::Gen;
using testing::rel_diff;

MatElemQuery query(int n, int k, int l, Parity parity, double a, double lambda,
                   double mu) {
  return MatElemQuery{n, k, l, parity, ParaParam(a), lambda, mu};
}

Complex fock_oracle(const MatElemQuery& q) {
  const int power = 2 * q.k;
  const TruncatedRep rep =
      build_rep(q.a, exact_dim(power, q.bra_state(), q.ket_state()));
  return matrix_power_element(rep, q.lambda, q.mu, power, q.bra_state(),
                              q.ket_state());
}

TEST(DiagJ, Examples) {
  for (int k = 0; k <= 8; ++k) {
    const double a = 1.7;
    const double t = 0.6 * 0.6 + 1.1 * 1.1;
    EXPECT_LE(rel_diff(diag_J(query(0, k, 0, Parity::kEven, a, 0.6, 1.1)),
                       std::pow(t, k) * rising_factorial(a, k)),
              1e-14);
  }
  for (double a : {0.3, 1.0, 4.2}) {
    EXPECT_NEAR(diag_J(query(1, 1, 0, Parity::kEven, a, 1.0, 0.0)), a + 2.0, 1e-14);
  }
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(diag_J(query(n, 0, 0, Parity::kEven, 0.9, 0.4, 0.2)), 1.0);
  }
}

TEST(DiagS, Examples) {
  const double a = 1.3;
  EXPECT_NEAR(diag_S(query(0, 2, 0, Parity::kEven, a, 0.0, 1.0)), 2.99, 1e-14);
  EXPECT_LE(rel_diff(diag_S(query(1, 2, 0, Parity::kEven, 0.5, 1.0, 0.0)),
                     diag_J(query(1, 2, 0, Parity::kEven, 0.5, 1.0, 0.0))),
            1e-14);
  for (double b : {0.2, 1.0, 3.3}) {
    EXPECT_NEAR(diag_S(query(0, 1, 0, Parity::kOdd, b, 1.0, 0.0)), b + 1.0, 1e-14);
  }
}

TEST(DiagJS, PreconditionsAndRange) {
  try {
    diag_J(query(1, 2, 1, Parity::kEven, 1.0, 1.0, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParameters);
  }
  EXPECT_THROW(diag_S(query(0, 2, -1, Parity::kEven, 1.0, 1.0, 0.0)), Error);
  try {
    diag_S(query(kMaxPairIndex + 1, 1, 0, Parity::kEven, 1.0, 1.0, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfSupportedRange);
  }
  EXPECT_NO_THROW(diag_J(query(kMaxPairIndex, 3, 0, Parity::kEven, 1.0, 1.0, 0.0)));
}

TEST(MatElemQuery, StateIndices) {
  const MatElemQuery q = query(3, 2, -1, Parity::kOdd, 0.4, 0.0, 1.0);
  EXPECT_EQ(q.ket_state(), 7);
  EXPECT_EQ(q.bra_state(), 5);
  EXPECT_EQ(q.effective_a(), 1.4);
  EXPECT_EQ(q.t(), 1.0);
}

TEST(OffdiagClosed, Examples) {
  for (int k = 0; k <= 4; ++k) {
    for (int l : {k + 1, -(k + 1), k + 3}) {
      EXPECT_EQ(offdiag_closed(query(6, k, l, Parity::kEven, 1.1, 0.5, 0.5)),
                Complex(0.0));
    }
  }
  for_all(60, 20, [](Gen& g) {
    const MatElemQuery q = query(g.integer(0, 8), g.integer(0, 7), 0,
                                 g.coin() ? Parity::kOdd : Parity::kEven,
                                 g.uniform(0.05, 4.0), g.uniform(-1.0, 1.0),
                                 g.uniform(-1.0, 1.0));
    EXPECT_LE(rel_diff(offdiag_closed(q), Complex(diag_J(q))), 1e-12);
  });
  const MatElemQuery q = query(0, 1, 1, Parity::kEven, 1.5, 1.0, 0.0);
  EXPECT_LE(rel_diff(offdiag_closed(q), fock_oracle(q)), 1e-14);
}

TEST(OffdiagRecurrence, Examples) {
  EXPECT_EQ(offdiag_recurrence(query(3, 0, 0, Parity::kEven, 0.8, 0.3, 0.1)),
            Complex(1.0));
  for (int n = 0; n <= 5; ++n) {
    const double a = 0.8;
    const double t = 0.3 * 0.3 + 0.1 * 0.1;
    EXPECT_LE(rel_diff(offdiag_recurrence(query(n, 1, 0, Parity::kEven, a, 0.3, 0.1)),
                       Complex(t * (a + 2.0 * n))),
              1e-14);
  }
}

TEST(MatElem, AllRoutesAgreeWithFockOracle) {
  for_all(400, 21, [](Gen& g) {
    const int n = g.integer(0, 6);
    const int k = g.integer(0, 6);
    const int l = g.integer(-k, k);
    const MatElemQuery q = query(n, k, l, g.coin() ? Parity::kOdd : Parity::kEven,
                                 g.pick(std::vector<double>{0.3, 0.7, 1.5, 2.5}),
                                 g.uniform(-1.2, 1.2), g.uniform(-1.2, 1.2));
    if (q.bra_state() < 0) return;
    const Complex oracle = fock_oracle(q);
    if (std::abs(oracle) < 1e-300) {
      EXPECT_LT(std::abs(offdiag_closed(q)), 1e-300);
      return;
    }
    EXPECT_LE(rel_diff(offdiag_closed(q), oracle), 1e-10);
    EXPECT_LE(rel_diff(offdiag_recurrence(q), oracle), 1e-10);
    if (l == 0) {
      EXPECT_LE(rel_diff(Complex(diag_J(q)), oracle), 1e-10);
      EXPECT_LE(rel_diff(Complex(diag_S(q)), oracle), 1e-10);
    }
  });
}

TEST(MatElem, OddParityIsShiftedEven) {
  for_all(200, 22, [](Gen& g) {
    const int n = g.integer(0, 8);
    const int k = g.integer(0, 8);
    const int l = g.integer(-k, k);
    const double a = g.uniform(0.05, 4.0);
    const double lambda = g.uniform(-1.0, 1.0);
    const double mu = g.uniform(-1.0, 1.0);
    const MatElemQuery odd = query(n, k, l, Parity::kOdd, a, lambda, mu);
    const MatElemQuery even = query(n, k, l, Parity::kEven, a + 1.0, lambda, mu);
    EXPECT_EQ(offdiag_closed(odd), offdiag_closed(even));
    EXPECT_EQ(offdiag_recurrence(odd), offdiag_recurrence(even));
  });
}

TEST(MatElem, HermitianSymmetry) {
  // <m|X^p|n> = conj(<n|X^p|m>) since X is Hermitian.
  for_all(100, 23, [](Gen& g) {
    const int k = g.integer(0, 6);
    const int l = g.integer(0, k);
    const int n = g.integer(0, 6);
    const Parity parity = g.coin() ? Parity::kOdd : Parity::kEven;
    const double a = g.uniform(0.1, 3.0);
    const double lambda = g.uniform(-1.0, 1.0);
    const double mu = g.uniform(-1.0, 1.0);
    const Complex up = offdiag_closed(query(n, k, l, parity, a, lambda, mu));
    const Complex down = offdiag_closed(query(n + l, k, -l, parity, a, lambda, mu));
    EXPECT_LE(std::abs(up - std::conj(down)), 1e-11 * std::max(1.0, std::abs(up)));
  });
}

double exp_oracle(int state, double a, double t) {
  const TruncatedRep rep = build_rep(ParaParam(a), 140);
  const ComplexMatrix ix = Complex(0.0, 1.0) * x_matrix(rep, 0.0, std::sqrt(t));
  const ComplexMatrix u = ix.exp();
  return u(state, state).real();
}

TEST(ExpDiag, Examples) {
  for (double a : {0.3, 1.5, 2.2}) {
    for (double t : {0.0, 0.7, 3.0}) {
      const double want = hyp1f1(a, 0.5, -t / 4.0).value;
      EXPECT_LE(std::fabs(exp_diag_A28(0, Parity::kEven, ParaParam(a), t).value - want),
                1e-13);
      EXPECT_LE(std::fabs(exp_diag_A27(0, Parity::kEven, ParaParam(a), t).value - want),
                1e-12);
    }
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(exp_diag_A28(n, Parity::kOdd, ParaParam(a), 0.0).value, 1.0);
      EXPECT_EQ(exp_diag_A27(n, Parity::kEven, ParaParam(a), 0.0).value, 1.0);
    }
  }
  const ParaParam a15(1.5);
  EXPECT_LE(std::fabs(exp_diag_A28(1, Parity::kEven, a15, 2.0).value -
                      exp_diag_series(1, Parity::kEven, a15, 2.0).value),
            1e-12);
  const ParaParam a25(2.5);
  EXPECT_LE(rel_diff(exp_diag_A27(2, Parity::kEven, a25, 3.0).value,
                     exp_diag_A28(2, Parity::kEven, a25, 3.0).value),
            1e-10);
}

TEST(ExpDiag, RoutesAgreeWithMatrixExponential) {
  for_all(40, 24, [](Gen& g) {
    const int n = g.integer(0, 5);
    const Parity parity = g.coin() ? Parity::kOdd : Parity::kEven;
    const double a = g.uniform(0.1, 3.0);
    const double t = g.uniform(0.0, 12.0);
    const int state = 2 * n + (parity == Parity::kOdd ? 1 : 0);
    const double want = exp_oracle(state, a, t);
    const ParaParam pa(a);
    EXPECT_LE(std::fabs(exp_diag_A28(n, parity, pa, t).value - want), 1e-10)
        << "n=" << n << " a=" << a << " t=" << t;
    EXPECT_LE(std::fabs(exp_diag_A27(n, parity, pa, t).value - want), 1e-10);
    // The Taylor series cancels heavily for large t; compare it where its
    // largest term stays moderate.
    if (t <= 6.0) {
      EXPECT_LE(std::fabs(exp_diag_series(n, parity, pa, t).value - want), 1e-10);
    }
  });
}

TEST(ExpDiag, NegativeTRejected) {
  EXPECT_THROW(exp_diag_A28(0, Parity::kEven, ParaParam(1.0), -1.0), Error);
  EXPECT_THROW(exp_diag_A27(0, Parity::kEven, ParaParam(1.0), -1.0), Error);
  EXPECT_THROW(exp_diag_series(0, Parity::kEven, ParaParam(1.0), -1.0), Error);
}

}  // namespace
}  // namespace parabose
