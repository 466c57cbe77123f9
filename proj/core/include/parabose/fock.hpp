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

#include <complex>
#include <optional>

#include <Eigen/Dense>

// Truncated matrix realization of the parabose operators b+ and b- on the
// Fock basis |0>, ..., |N-1>. Used as a brute-force oracle for the closed
// forms in matelem.

namespace parabose {

/// Representation parameter a > 0. When a == 1/2 + m exactly for a
/// nonnegative integer m, `half_integer_m` holds m and every Wigner series
/// in this library terminates.
class ParaParam {
 public:
  /// Throws Error(kInvalidParameters) unless a > 0 and finite.
  explicit ParaParam(double a);

  static ParaParam half_integer(int m);

  double value() const { return a_; }
  std::optional<int> half_integer_m() const { return m_; }
  bool is_half_integer() const { return m_.has_value(); }

  /// a -> a + 1 (the odd-state shift).
  ParaParam shifted() const { return ParaParam(a_ + 1.0); }

 private:
  double a_;
  std::optional<int> m_;
};

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// (mu + i lambda)/sqrt(2) and (mu - i lambda)/sqrt(2).
struct AlphaPair {
  Complex plus;
  Complex minus;

  static AlphaPair from(double lambda, double mu);
};

class TruncatedRep {
 public:
  /// Throws Error(kInvalidParameters) if dim < 1.
  TruncatedRep(ParaParam a, int dim);

  const ParaParam& param() const { return a_; }
  int dim() const { return dim_; }
  const Eigen::MatrixXd& b_plus() const { return b_plus_; }
  const Eigen::MatrixXd& b_minus() const { return b_minus_; }

  /// q = (b+ + b-)/sqrt(2), p = i (b+ - b-)/sqrt(2).
  ComplexMatrix q_matrix() const;
  ComplexMatrix p_matrix() const;

 private:
  ParaParam a_;
  int dim_;
  Eigen::MatrixXd b_plus_;
  Eigen::MatrixXd b_minus_;
};

TruncatedRep build_rep(ParaParam a, int dim);

/// X = lambda p + mu q = alpha+ b+ + alpha- b-.
ComplexMatrix x_matrix(const TruncatedRep& rep, double lambda, double mu);

/// <n|{b-, b+}|n>; expected 2(n + a). Needs n <= dim - 2.
double anticommutator_check(const TruncatedRep& rep, int n);

/// <n|[p, q]|n>; expected -2ai for even n and -2(1-a)i for odd n.
/// Needs n <= dim - 2.
Complex commutator_pq_check(const TruncatedRep& rep, int n);

/// <row|X^power|col>. Since X changes the occupation number by one, the value
/// is free of truncation effects when dim >= max(row, col) + power + 1; this
/// is enforced with Error(kTruncationTooSmall).
Complex matrix_power_element(const TruncatedRep& rep, double lambda, double mu,
                             int power, int row, int col);

/// Smallest dimension for which matrix_power_element(power, row, col) is exact.
int exact_dim(int power, int row, int col);

}  // namespace parabose
