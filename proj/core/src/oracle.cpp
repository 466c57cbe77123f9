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

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "parabose/error.hpp"
#include "parabose/matelem.hpp"
#include "parabose/series.hpp"
#include "parabose/specfun.hpp"

namespace parabose {

namespace {

constexpr double kBoundaryRatio = 1e-14;
constexpr double kMaxImag = 1e-9;
constexpr double kMaxHalfWidth = 64.0;
constexpr int kMaxAdaptiveDoublings = 4;

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre rule on [lo, hi], nodes ascending.
Rule gauss_legendre(int n, double lo, double hi) {
  std::unique_ptr<gsl_integration_glfixed_table,
                  decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(n),
            &gsl_integration_glfixed_table_free);
  if (!table) {
    throw Error(ErrorCode::kInvalidParameters,
                "cannot build a Gauss-Legendre rule with " + std::to_string(n) +
                    " nodes");
  }
  std::vector<std::pair<double, double>> nodes(n);
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(lo, hi, i, &nodes[i].first, &nodes[i].second,
                                  table.get());
  }
  std::sort(nodes.begin(), nodes.end());
  Rule rule;
  for (const auto& [x, w] : nodes) {
    rule.x.push_back(x);
    rule.w.push_back(w);
  }
  return rule;
}

// Evaluates f on the unique radii of the symmetric tensor grid. g[u * U + v]
// holds f(r_u^2 + r_v^2) where r_u is the u-th nonnegative node.
std::vector<double> radial_table(const std::function<double(double)>& f,
                                 const std::vector<double>& radii, int threads) {
  const int count = static_cast<int>(radii.size());
  std::vector<double> g(static_cast<std::size_t>(count) * count);
  auto fill_rows = [&](int first, int stride) {
    for (int u = first; u < count; u += stride) {
      for (int v = u; v < count; ++v) {
        const double value = f(radii[u] * radii[u] + radii[v] * radii[v]);
        g[static_cast<std::size_t>(u) * count + v] = value;
        g[static_cast<std::size_t>(v) * count + u] = value;
      }
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(fill_rows, t, threads);
  }
  return g;
}

std::complex<double> integrate_once(const std::function<double(double)>& f,
                                    double p, double q, double half_width,
                                    int nodes, int threads) {
  const Rule rule = gauss_legendre(nodes, -half_width, half_width);
  const int half = nodes / 2;
  const int unique = nodes - half;

  // Force exact mirror symmetry of nodes and weights.
  std::vector<double> radii(unique), radial_w(unique);
  for (int u = 0; u < unique; ++u) {
    radii[u] = std::fabs(rule.x[half + u]);
    radial_w[u] = rule.w[half + u];
  }
  std::vector<int> index(nodes);
  std::vector<double> x(nodes), w(nodes);
  for (int i = 0; i < nodes; ++i) {
    index[i] = std::max(i, nodes - 1 - i) - half;
    x[i] = (i < half ? -1.0 : 1.0) * radii[index[i]];
    w[i] = radial_w[index[i]];
  }

  const std::vector<double> g = radial_table(f, radii, threads);
  std::vector<std::complex<double>> phase_x(nodes), phase_y(nodes);
  for (int i = 0; i < nodes; ++i) {
    phase_x[i] = std::polar(1.0, -x[i] * p);
    phase_y[i] = std::polar(1.0, -x[i] * q);
  }

  std::vector<double> row_re(nodes), row_im(nodes), col_re(nodes), col_im(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double* g_row = &g[static_cast<std::size_t>(index[i]) * unique];
    for (int j = 0; j < nodes; ++j) {
      const std::complex<double> term = w[j] * g_row[index[j]] * phase_y[j];
      col_re[j] = term.real();
      col_im[j] = term.imag();
    }
    const std::complex<double> row =
        w[i] * phase_x[i] *
        std::complex<double>(pairwise_sum(col_re), pairwise_sum(col_im));
    row_re[i] = row.real();
    row_im[i] = row.imag();
  }
  return {pairwise_sum(row_re), pairwise_sum(row_im)};
}

double boundary_envelope(const std::function<double(double)>& f, double h) {
  double worst = 0.0;
  for (int s = 0; s <= 16; ++s) {
    worst = std::max(worst, std::fabs(f(h * h * (1.0 + s / 16.0))));
  }
  return worst;
}

double peak_envelope(const std::function<double(double)>& f, double h) {
  double peak = 0.0;
  for (int s = 0; s <= 256; ++s) {
    peak = std::max(peak, std::fabs(f(h * h * s / 256.0)));
  }
  return peak;
}

double resolve_half_width(const std::function<double(double)>& f, double h) {
  while (boundary_envelope(f, h) > kBoundaryRatio * peak_envelope(f, h)) {
    h += 1.0;
    if (h > kMaxHalfWidth) {
      throw Error(ErrorCode::kQuadratureDidNotConverge,
                  "integrand does not decay on a square of half-width 64");
    }
  }
  return h;
}

void require_half_integer(ParaParam a) {
  if (!a.is_half_integer()) {
    throw Error(ErrorCode::kInvalidParameters,
                "quadrature checks need a = 1/2 + m exactly");
  }
}

}  // namespace

QuadResult integrate_radial(const std::function<double(double)>& f, double p,
                            double q, const QuadSpec& spec) {
  if (spec.nodes_per_axis < 2 || !(spec.half_width > 0.0)) {
    throw Error(ErrorCode::kInvalidParameters, "invalid QuadSpec");
  }
  QuadResult out;
  out.half_width = resolve_half_width(f, spec.half_width);

  int nodes = spec.nodes_per_axis;
  std::complex<double> coarse =
      integrate_once(f, p, q, out.half_width, nodes, spec.threads);
  const int doublings =
      spec.scheme == QuadScheme::kAdaptive ? kMaxAdaptiveDoublings : 1;
  for (int d = 0; d < doublings; ++d) {
    nodes *= 2;
    const std::complex<double> fine =
        integrate_once(f, p, q, out.half_width, nodes, spec.threads);
    out.refinement_delta = std::abs(fine - coarse);
    coarse = fine;
    if (out.refinement_delta <= spec.refinement_tol) break;
  }
  out.nodes_per_axis = nodes;
  out.value = coarse.real();
  out.imag = coarse.imag();

  if (out.refinement_delta > spec.refinement_tol) {
    throw Error(ErrorCode::kQuadratureDidNotConverge,
                "refinement changed the answer by " +
                    std::to_string(out.refinement_delta));
  }
  if (std::fabs(out.imag) > kMaxImag) {
    throw Error(ErrorCode::kQuadratureDidNotConverge,
                "imaginary part " + std::to_string(out.imag) +
                    " exceeds 1e-9");
  }
  return out;
}

HermiteIntegralResult integral_appA_check(int k, double p, double q,
                                    const QuadSpec& spec) {
  if (k < 0 || k > 8) {
    throw Error(ErrorCode::kOutOfSupportedRange, "k must lie in [0, 8]");
  }
  const auto integrand = [k](double t) {
    return std::exp(-t / 4.0) * std::pow(t, k);
  };
  QuadSpec scaled = spec;
  constexpr double kNorm = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  scaled.refinement_tol = spec.refinement_tol / kNorm;
  const QuadResult quad = integrate_radial(integrand, p, q, scaled);

  HermiteIntegralResult r;
  r.lhs = kNorm * quad.value;
  const double t = p * p + q * q;
  r.rhs = std::numbers::inv_pi * std::exp(-t) * factorial(k) * std::pow(4.0, k) *
          laguerre_gen(k, 0.0, t);
  r.abs_diff = std::fabs(r.lhs - r.rhs);
  return r;
}

QuadResult wigner_quadrature(int n, ParaParam a, PhasePoint point,
                             const QuadSpec& spec) {
  require_half_integer(a);
  if (n < 0 || n > 8) {
    throw Error(ErrorCode::kOutOfSupportedRange, "n must lie in [0, 8]");
  }
  const Parity parity = n % 2 == 0 ? Parity::kEven : Parity::kOdd;
  const auto integrand = [&](double t) {
    return exp_diag_A28(n / 2, parity, a, t).value;
  };
  constexpr double kNorm = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  QuadSpec scaled = spec;
  scaled.refinement_tol = spec.refinement_tol / kNorm;
  QuadResult r = integrate_radial(integrand, point.p, point.q, scaled);
  r.value *= kNorm;
  r.imag *= kNorm;
  r.refinement_delta *= kNorm;
  return r;
}

namespace {

QuadResult phase_moment(int n, ParaParam a, const QuadSpec& spec,
                        bool energy) {
  const auto integrand = [&](double t) {
    WignerQuery query;
    query.n = n;
    query.a = a;
    query.point = {std::sqrt(t), 0.0};
    const double w = wn(query).value;
    return energy ? 0.5 * t * w : w;
  };
  return integrate_radial(integrand, 0.0, 0.0, spec);
}

}  // namespace

QuadResult normalization(int n, ParaParam a, const QuadSpec& spec) {
  return phase_moment(n, a, spec, false);
}

QuadResult energy_moment(int n, ParaParam a, const QuadSpec& spec) {
  return phase_moment(n, a, spec, true);
}

double wavefn_overlap(int m, int n, ParaParam a, int nodes, double half_width) {
  const Rule rule = gauss_legendre(nodes, 0.0, 1.0);
  std::vector<double> terms;
  terms.reserve(2 * rule.x.size());
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const double u = rule.x[i];
    const double q = half_width * u * u * u * u;
    const double jacobian = 4.0 * half_width * u * u * u;
    for (double side : {-1.0, 1.0}) {
      terms.push_back(rule.w[i] * jacobian * wavefn(m, a, side * q).value *
                      wavefn(n, a, side * q).value);
    }
  }
  return pairwise_sum(terms);
}

}  // namespace parabose
