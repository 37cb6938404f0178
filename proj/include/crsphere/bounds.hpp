// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "crsphere/rational.hpp"

namespace crsphere {

/// Rayleigh-quotient sufficiency report for the stability inequalities on
/// S^m in R^{m+n}. All verdict flags are decided by exact squared
/// comparisons; the floating-point coefficient values are informational.
struct BoundReport {
  int l = 1, s = 1, m = 2, n = 2;
  Rational theta{1};

  Rational lambda_l;  // l (l + m - 1)
  Rational lambda_s;  // s (s + m - 1)

  /// l(l+m-1) >= m^2 (n-2)^2: eigenvalue large enough for the four-function
  /// inequality on the tail eigenspaces.
  bool eigenvalue_sufficiency = false;

  /// m^2 (n-2)^2 theta^2 / lambda_l, the square of the one-eigenspace
  /// contraction coefficient m (n-2) theta / sqrt(lambda_l).
  Rational coeff_one_space_sq;
  double coeff_one_space = 0.0;
  /// n == 2, or the contraction coefficient is <= 1; either certifies
  /// stability on the tail eigenspaces.
  bool stable_flag = false;

  /// m theta (1/sqrt(lambda_l) + 1/sqrt(lambda_s)), the two-eigenspace pair
  /// coefficient, and the exact verdict of coefficient <= 1.
  double coeff_two_spaces = 0.0;
  bool two_space_le_one = false;
};

/// pre: l, s >= 1, m >= 2, n >= 2, theta >= 0.
BoundReport rayleigh_bound(int l, int s, int m, int n, const Rational& theta);

/// Exact comparison p * sqrt(q) <= t for rationals p, q, t with p, q >= 0.
bool sqrt_scaled_le(const Rational& p, const Rational& q, const Rational& t);

}  // namespace crsphere
