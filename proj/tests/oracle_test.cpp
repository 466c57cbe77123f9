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


#include "parabose/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "parabose/error.hpp"

namespace parabose {
namespace {

using std::numbers::inv_pi;
using std::numbers::pi;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected parabose::Error";
  return ErrorCode::kInvalidParameters;
}

double wn_at(int n, double a, PhasePoint pt) {
  WignerQuery q;
  q.n = n;
  q.a = ParaParam(a);
  q.point = pt;
  return wn(q).value;
}

TEST(IntegrateRadial, GaussianFourierTransform) {
  const auto gauss = [](double t) { return std::exp(-t); };
  for (auto [p, q] : {std::pair{0.0, 0.0}, {1.0, -0.5}, {2.5, 1.5}}) {
    const QuadResult r = integrate_radial(gauss, p, q);
    EXPECT_NEAR(r.value, pi * std::exp(-(p * p + q * q) / 4.0), 1e-12);
    EXPECT_LE(std::fabs(r.imag), 1e-12);
    EXPECT_LE(r.refinement_delta, 1e-8);
    EXPECT_EQ(r.nodes_per_axis, 800);  // the refined answer is reported
  }
}

TEST(IntegrateRadial, ThreadCountDoesNotChangeBits) {
  const auto f = [](double t) { return (1.0 - t + 0.1 * t * t) * std::exp(-t / 2.0); };
  QuadSpec one;
  QuadSpec three;
  three.threads = 3;
  const QuadResult a = integrate_radial(f, 0.7, -1.1, one);
  const QuadResult b = integrate_radial(f, 0.7, -1.1, three);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.imag, b.imag);
}

TEST(IntegrateRadial, AdaptiveAgreesWithFixed) {
  const auto f = [](double t) { return t * std::exp(-t); };
  QuadSpec adaptive;
  adaptive.scheme = QuadScheme::kAdaptive;
  adaptive.nodes_per_axis = 100;
  const double fixed = integrate_radial(f, 1.0, 1.0).value;
  EXPECT_NEAR(integrate_radial(f, 1.0, 1.0, adaptive).value, fixed, 1e-10);
}

TEST(IntegrateRadial, HalfWidthGrowsForWideIntegrands) {
  const auto wide = [](double t) { return std::exp(-t / 40.0); };
  const QuadResult r = integrate_radial(wide, 0.0, 0.0);
  EXPECT_GT(r.half_width, 12.0);
  EXPECT_NEAR(r.value, 40.0 * pi, 1e-8);
}

TEST(IntegrateRadial, Errors) {
  const auto gauss = [](double t) { return std::exp(-t); };
  QuadSpec bad;
  bad.nodes_per_axis = 0;
  EXPECT_EQ(code_of([&] { integrate_radial(gauss, 0.0, 0.0, bad); }),
            ErrorCode::kInvalidParameters);
  QuadSpec coarse;
  coarse.nodes_per_axis = 6;
  coarse.refinement_tol = 1e-12;
  EXPECT_EQ(code_of([&] { integrate_radial(gauss, 3.0, 0.0, coarse); }),
            ErrorCode::kQuadratureDidNotConverge);
}

TEST(HermiteIntegral, Examples) {
  const HermiteIntegralResult r = integral_appA_check(0, 0.0, 0.0);
  EXPECT_NEAR(r.lhs, inv_pi, 1e-12);
  EXPECT_LE(r.abs_diff, 1e-8);
  for (int k = 1; k <= 2; ++k) {
    EXPECT_LE(integral_appA_check(k, 1.0, -1.0).abs_diff, 1e-8);
  }
  EXPECT_EQ(code_of([] { integral_appA_check(9, 0.0, 0.0); }),
            ErrorCode::kOutOfSupportedRange);
}

TEST(WignerQuadrature, Examples) {
  EXPECT_NEAR(wigner_quadrature(0, ParaParam(0.5), {0.0, 0.0}).value, inv_pi, 1e-10);
  EXPECT_NEAR(wigner_quadrature(0, ParaParam(1.5), {0.0, 0.0}).value, -inv_pi, 1e-10);
  const PhasePoint pt{1.0, 1.0};
  EXPECT_NEAR(wigner_quadrature(3, ParaParam(1.5), pt).value, wn_at(3, 1.5, pt), 1e-7);
}

TEST(WignerQuadrature, Errors) {
  EXPECT_EQ(code_of([] { wigner_quadrature(0, ParaParam(1.3), {0.0, 0.0}); }),
            ErrorCode::kInvalidParameters);
  EXPECT_EQ(code_of([] { wigner_quadrature(9, ParaParam(1.5), {0.0, 0.0}); }),
            ErrorCode::kOutOfSupportedRange);
}

TEST(Normalization, Examples) {
  EXPECT_NEAR(normalization(0, ParaParam(0.5)).value, 1.0, 1e-8);
  EXPECT_NEAR(normalization(0, ParaParam(2.5)).value, 1.0, 1e-8);
  EXPECT_NEAR(normalization(3, ParaParam(1.5)).value, 1.0, 1e-8);
  // Infinite series; fewer nodes keep the run short, refinement still checks.
  QuadSpec light;
  light.nodes_per_axis = 160;
  EXPECT_NEAR(normalization(1, ParaParam(5.2), light).value, 1.0, 1e-8);
  EXPECT_NEAR(energy_moment(1, ParaParam(5.2), light).value, 6.2, 1e-7);
}

TEST(EnergyMoment, Examples) {
  EXPECT_NEAR(energy_moment(0, ParaParam(0.5)).value, 0.5, 1e-7);
  EXPECT_NEAR(energy_moment(0, ParaParam(1.5)).value, 1.5, 1e-7);
  EXPECT_NEAR(energy_moment(2, ParaParam(1.5)).value, 3.5, 1e-7);
}

TEST(WavefnOverlap, Orthonormal) {
  for (double a : {0.7, 2.5}) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        EXPECT_NEAR(wavefn_overlap(m, n, ParaParam(a)), m == n ? 1.0 : 0.0, 1e-8)
            << "m=" << m << " n=" << n << " a=" << a;
      }
    }
  }
}

}  // namespace
}  // namespace parabose
