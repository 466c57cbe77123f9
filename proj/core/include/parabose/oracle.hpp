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

#include <functional>

#include "parabose/fock.hpp"
#include "parabose/wigner.hpp"

// Quadrature-based checks that share no algebra with the closed forms: the
// defining double integral of W_n, the Gaussian-moment integral behind the
// Laguerre expansions, and normalization/energy moments of W_n.

namespace parabose {

enum class QuadScheme {
  kGaussLegendre,  ///< Fixed nodes, one refinement (2x nodes) as a check.
  kAdaptive,       ///< Doubles nodes until two successive answers agree.
};

/// Tensor-product Gauss-Legendre over [-H, H]^2.
///
/// `half_width` is a lower bound: it is widened until the integrand's
/// envelope at the boundary is below 1e-14 of its peak.
struct QuadSpec {
  QuadScheme scheme = QuadScheme::kGaussLegendre;
  double half_width = 12.0;
  int nodes_per_axis = 400;
  /// Answers that move by more than this under refinement are rejected.
  double refinement_tol = 1e-8;
  /// Worker threads for node evaluation; results do not depend on it.
  int threads = 1;
};

struct QuadResult {
  double value = 0.0;
  /// Imaginary part before it was discarded.
  double imag = 0.0;
  /// |answer(2N) - answer(N)| for the last refinement.
  double refinement_delta = 0.0;
  double half_width = 0.0;
  int nodes_per_axis = 0;
};

/// Integrates f(x^2 + y^2) e^{-i(x p + y q)} over the plane. The integrand is
/// evaluated in complex arithmetic; |imag| must stay below 1e-9.
/// Throws Error(kQuadratureDidNotConverge) if refinement moves the answer by
/// more than spec.refinement_tol.
QuadResult integrate_radial(const std::function<double(double)>& f, double p,
                            double q, const QuadSpec& spec = {});

struct HermiteIntegralResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
};

/// lhs = (1/4pi^2) double integral of e^{-t/4} e^{-i(lambda p + mu q)} t^k,
/// t = lambda^2 + mu^2, by quadrature; rhs = (1/pi) e^{-p^2-q^2} k! 4^k
/// L_k(p^2+q^2). Needs k <= 8.
HermiteIntegralResult integral_appA_check(int k, double p, double q,
                                    const QuadSpec& spec = {});

/// (1/4pi^2) double integral of <n|e^{iX}|n> e^{-i(lambda p + mu q)}, with the
/// matrix element from exp_diag_A28. Needs half-integer a and n <= 8.
QuadResult wigner_quadrature(int n, ParaParam a, PhasePoint point,
                             const QuadSpec& spec = {});

/// Double integral of W_n over the phase plane (expected 1).
QuadResult normalization(int n, ParaParam a, const QuadSpec& spec = {});

/// Double integral of (p^2+q^2)/2 W_n (expected n + a).
QuadResult energy_moment(int n, ParaParam a, const QuadSpec& spec = {});

/// Integral over the real line of Psi_m Psi_n. Each half-line is mapped
/// with q = H u^4 so the |q|^{a-1/2} factor becomes smooth in u.
double wavefn_overlap(int m, int n, ParaParam a, int nodes = 400,
                      double half_width = 12.0);

}  // namespace parabose
