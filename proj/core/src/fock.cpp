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

#include "parabose/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parabose/error.hpp"

namespace parabose {

ParaParam::ParaParam(double a) : a_(a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kInvalidParameters,
                "representation parameter must satisfy a > 0, got " +
                    std::to_string(a));
  }
  const double shifted = a - 0.5;
  if (shifted == std::floor(shifted) && shifted < 1e9) {
    m_ = static_cast<int>(shifted);
  }
}

ParaParam ParaParam::half_integer(int m) {
  if (m < 0) {
    throw Error(ErrorCode::kInvalidParameters, "m must be nonnegative");
  }
  return ParaParam(0.5 + m);
}

AlphaPair AlphaPair::from(double lambda, double mu) {
  const double s = 1.0 / std::sqrt(2.0);
  return {Complex(mu * s, lambda * s), Complex(mu * s, -lambda * s)};
}

TruncatedRep::TruncatedRep(ParaParam a, int dim) : a_(a), dim_(dim) {
  if (dim < 1) {
    throw Error(ErrorCode::kInvalidParameters, "dimension must be >= 1");
  }
  b_plus_ = Eigen::MatrixXd::Zero(dim, dim);
  const double av = a.value();
  // b+|2n> = sqrt(2(n+a))|2n+1>, b+|2n+1> = sqrt(2(n+1))|2n+2>.
  for (int col = 0; col + 1 < dim; ++col) {
    const int n = col / 2;
    b_plus_(col + 1, col) =
        col % 2 == 0 ? std::sqrt(2.0 * (n + av)) : std::sqrt(2.0 * (n + 1.0));
  }
  b_minus_ = b_plus_.transpose();
}

ComplexMatrix TruncatedRep::q_matrix() const {
  return ((b_plus_ + b_minus_) / std::sqrt(2.0)).cast<Complex>();
}

ComplexMatrix TruncatedRep::p_matrix() const {
  return Complex(0.0, 1.0 / std::sqrt(2.0)) * (b_plus_ - b_minus_).cast<Complex>();
}

TruncatedRep build_rep(ParaParam a, int dim) { return TruncatedRep(a, dim); }

ComplexMatrix x_matrix(const TruncatedRep& rep, double lambda, double mu) {
  const AlphaPair alpha = AlphaPair::from(lambda, mu);
  return alpha.plus * rep.b_plus().cast<Complex>() +
         alpha.minus * rep.b_minus().cast<Complex>();
}

namespace {

void require_buffer_row(const TruncatedRep& rep, int n) {
  if (n < 0 || n > rep.dim() - 2) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(n) + " needs n <= dim - 2 = " +
                    std::to_string(rep.dim() - 2));
  }
}

}  // namespace

double anticommutator_check(const TruncatedRep& rep, int n) {
  require_buffer_row(rep, n);
  const Eigen::MatrixXd anti =
      rep.b_minus() * rep.b_plus() + rep.b_plus() * rep.b_minus();
  return anti(n, n);
}

Complex commutator_pq_check(const TruncatedRep& rep, int n) {
  require_buffer_row(rep, n);
  const ComplexMatrix p = rep.p_matrix();
  const ComplexMatrix q = rep.q_matrix();
  const ComplexMatrix comm = p * q - q * p;
  return comm(n, n);
}

int exact_dim(int power, int row, int col) {
  return std::max(row, col) + power + 1;
}

Complex matrix_power_element(const TruncatedRep& rep, double lambda, double mu,
                             int power, int row, int col) {
  if (power < 0 || row < 0 || col < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative index or power");
  }
  if (rep.dim() < exact_dim(power, row, col)) {
    throw Error(ErrorCode::kTruncationTooSmall,
                "dim " + std::to_string(rep.dim()) + " < " +
                    std::to_string(exact_dim(power, row, col)) +
                    " required for an exact element");
  }
  const ComplexMatrix x = x_matrix(rep, lambda, mu);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(rep.dim());
  v(col) = 1.0;
  for (int i = 0; i < power; ++i) v = x * v;
  return v(row);
}

}  // namespace parabose
