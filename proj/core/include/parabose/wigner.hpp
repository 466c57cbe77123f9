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

#include "parabose/fock.hpp"
#include "parabose/series.hpp"

// Wigner distribution W_n(p, q) of the parabose oscillator for the symmetric
// exponential correspondence rule, plus the position-space wave functions.

namespace parabose {

/// Point in phase space (hbar = mass = omega = 1).
struct PhasePoint {
  double p = 0.0;
  double q = 0.0;

  double r2() const { return p * p + q * q; }
};

enum class Formula {
  kA29,  ///< Laguerre series in L_k(r^2), one inner sum per pair index j.
  kA31,  ///< Series in generalized Laguerre L^{(-j)}_{k+2j}(r^2).
  kW0M,  ///< Terminating 1F1 form; n in {0, 1} and half-integer a only.
};

struct WignerQuery {
  int n = 0;
  ParaParam a{0.5};
  PhasePoint point;
  Formula formula = Formula::kA29;
  SeriesControl ctl;
  /// Evaluate even when convergence_guard reports NotGuaranteed.
  bool allow_unguaranteed = false;
};

/// Classifies the Laguerre series for state n:
///   Exact          a is half-integer (the series terminates),
///   Converged      effective parameter (a, or a+1 for odd n) exceeds 1,
///   NotGuaranteed  otherwise.
Status convergence_guard(int n, ParaParam a);

/// Index of the last nonzero k-term of the chosen formula for half-integer a,
/// with m' = m (even n) or m+1 (odd n) and nu = floor(n/2): m' + 2 nu for
/// A29, m' for A31 and W0M. nullopt when a is not half-integer.
std::optional<int> termination_index(int n, ParaParam a,
                                     Formula formula = Formula::kA29);

/// W_0 = (1/pi) e^{-r^2} sum_k (1/2-a)_k/(1/2)_k L_k(r^2).
/// Throws Error(kNotGuaranteedConvergence) when the guard fails and
/// allow_unguaranteed is false.
EvalResult w0(ParaParam a, PhasePoint point, const SeriesControl& ctl = {},
              bool allow_unguaranteed = false);

/// W_0 for a = 1/2 + m: (1/pi) e^{-r^2} 1F1(-m; 3/2-m; r^2) / (1 - 2m).
EvalResult w0_polynomial(int m, PhasePoint point);

/// W_n for any n <= 2 * kMaxPairIndex + 1. Odd n is reduced to the even
/// formula with a -> a+1 before any other work.
EvalResult wn(const WignerQuery& query);

/// Canonical (a = 1/2) result ((-1)^n/pi) e^{-r^2} L_n(2 r^2).
double canonical_wn(int n, PhasePoint point);

struct WaveValue {
  double value = 0.0;
  /// Set when the value is infinite (even state, a < 1/2, q = 0).
  bool divergent = false;
};

/// Orthonormal position-space wave function Psi_n^{(a)}(q).
WaveValue wavefn(int n, ParaParam a, double q);

/// Residual of the singular-oscillator equation
///   -1/2 Psi'' + 1/2 q^2 Psi + 1/2 g(g-1) Psi / q^2 - E Psi
/// at q != 0, with Psi'' from central differences (h = 1e-4 max(1, |q|)).
/// g = a - 1/2 for even n, a + 1/2 for odd n; E = n + a.
double waveeq_residual(int n, ParaParam a, double q);

}  // namespace parabose
