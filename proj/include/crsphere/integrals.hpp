// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "crsphere/polynomial.hpp"
#include "crsphere/rational.hpp"

namespace crsphere {

/// Exact value of the monomial moment  integral_{S^m} phi^a dM / |S^m|.
///
/// Computed by the degree-lowering recursion
///   I(a) = sum_i a_i (a_i - 1) / (l (l + m - 1)) * I(a - 2 e_i),   l = |a|,
/// with I(0) = 1, after the parity short-circuit: the value is zero as soon
/// as any exponent is odd. Values are memoized process-wide per (m, a);
/// concurrent lookups are safe.
Rational integrate_monomial(const MultiIndex& a, int m = 2);

/// Term-by-term linear extension of integrate_monomial. Mixed-degree input is
/// fine; every monomial is homogeneous on its own.
Rational integrate_poly(const Polynomial& p, int m = 2);

/// Independent closed form on S^2 for all-even indices:
///   I(a) = prod_i (a_i - 1)!! / (|a| + 1)!!.
/// Exists purely to cross-check the recursion; throws if any exponent is odd.
Rational factorial_oracle(const MultiIndex& a);

/// 1/(m+1): the conversion constant between unit-area values and values in
/// units of integral phi_i^2 dM.
Rational phi_squared_integral(int m = 2);

}  // namespace crsphere
