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

#include "parabose/fock.hpp"
#include "parabose/series.hpp"

// Matrix elements <2n+2l| X^{2k} |2n> of X = lambda p + mu q, in closed form
// and by recurrence, and the diagonal exponential elements <n|e^{iX}|n>.

namespace parabose {

enum class Parity { kEven, kOdd };

/// Queries whose Fock pair index exceeds this are rejected.
inline constexpr int kMaxPairIndex = 40;

/// Selects <2n + 2l + p| X^{2k} |2n + p> with p = 0 (even) or 1 (odd).
struct MatElemQuery {
  int n = 0;
  int k = 0;
  int l = 0;
  Parity parity = Parity::kEven;
  ParaParam a{0.5};
  double lambda = 0.0;
  double mu = 0.0;

  /// lambda^2 + mu^2.
  double t() const { return lambda * lambda + mu * mu; }
  /// a for even parity, a + 1 for odd parity.
  double effective_a() const;
  /// Fock index of the ket, 2n + parity.
  int ket_state() const { return 2 * n + (parity == Parity::kOdd ? 1 : 0); }
  int bra_state() const { return ket_state() + 2 * l; }
};

/// Expansion of the diagonal element as a sum over pairs (2j)!/j! C(n,j)
/// C(k,2j) (a+n-j)_j (a+2n)_{k-2j}, times t^k. Requires l == 0.
double diag_J(const MatElemQuery& q);

/// Alternative expansion sum_j C(n,j)/j! (a+j)_{k-j} (k+1-j)_{2j}, times t^k.
/// Requires l == 0.
double diag_S(const MatElemQuery& q);

/// Closed form for arbitrary l; zero when |l| > k or the bra index would be
/// negative.
Complex offdiag_closed(const MatElemQuery& q);

/// Same element by dynamic programming over the three-term recurrence
///   F_{k,l}(n) = 2 (alpha+)^2 sqrt((n+a)(n+1)) F_{k-1,l-1}(n+1)
///              + 2 alpha+ alpha- (2n+a) F_{k-1,l}(n)
///              + 2 (alpha-)^2 sqrt(n(n+a-1)) F_{k-1,l+1}(n-1)
/// from F_{0,0} = 1 and F_{0,l != 0} = 0. Shares no code with the closed forms.
Complex offdiag_recurrence(const MatElemQuery& q);

/// <2n+p| e^{iX} |2n+p> as sum_j C(n,j) (2j)! (a+n-j)_j / ((4j)! j!) t^{2j}
/// 1F1(a+2n; 2j+1/2; -t/4), with a -> a+1 for odd parity. t = lambda^2+mu^2.
EvalResult exp_diag_A28(int n, Parity parity, ParaParam a, double t,
                        const SeriesControl& ctl = {});

/// Same element as sum_j C(n,j) (-1)^j / j! t^j
/// 2F2(a+j, 1+2j; j+1/2, 1+j; -t/4). For t/4 > 2 each 2F2 is rewritten as
/// e^{-t/4} times a finite sum of 2F2 with argument +t/4.
EvalResult exp_diag_A27(int n, Parity parity, ParaParam a, double t,
                        const SeriesControl& ctl = {});

/// Same element by summing sum_k (-1)^k <X^{2k}> / (2k)! with diag_S. Meant
/// for moderate t (the terms are summed directly).
EvalResult exp_diag_series(int n, Parity parity, ParaParam a, double t,
                           const SeriesControl& ctl = {});

}  // namespace parabose
