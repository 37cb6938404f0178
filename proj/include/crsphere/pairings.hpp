// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "crsphere/integrals.hpp"
#include "crsphere/polynomial.hpp"
#include "crsphere/rational.hpp"

namespace crsphere {

/// Laplace spectrum data for S^m_r.
struct SpectralData {
  int l = 0;
  int m = 2;
  Rational r{1};
  Rational lambda;       // l (l + m - 1) / r^2
  Integer multiplicity;  // C(m+l, m) - C(m+l-2, m); 2l+1 when m = 2
};

SpectralData spectral(int l, int m, const Rational& r);

/// Dirichlet pairing integral_{S^2} <grad phi^a, grad phi^b> dM / |S^2| via
/// the reduced single-sum formula
///   sum_i [ l((a_i+b_i) - (a_i-b_i)^2) + 2 a_i b_i ] / (2(2l+1)) * I(a+b-2e_i).
/// Requires |a| = |b| (throws std::invalid_argument otherwise). Vanishes
/// unless a + b is (E,E,E).
///
/// Note on orientation: with this convention the Dirichlet energy of every
/// nonconstant monomial is positive, and for equal-degree harmonics f, h the
/// pairing equals +lambda_l * integral f h. Some presentations display that
/// orthogonality relation with a minus sign; the positive sign is the one
/// compatible with integral ||grad phi_i||^2 = (m/(m+1)) |S^m|, so the
/// positive convention is asserted throughout.
Rational dirichlet_pair(const MultiIndex& a, const MultiIndex& b);

/// Same pairing through the pointwise identity
///   -l^2 I(a+b) + sum_i a_i b_i I(a+b-2e_i).
/// Kept as the independent second route; must agree with dirichlet_pair.
Rational dirichlet_pair_pointwise(const MultiIndex& a, const MultiIndex& b);

/// Trilinear Cauchy-Riemann pairing
///   integral_{S^2} phi_axis <J grad phi^a, grad phi^b> dM / |S^2|
/// through the three-term closed forms (one per axis); antisymmetric in
/// (a, b) and zero unless a + b has the matching parity signature
/// (axis 1: (E,O,O), axis 2: (O,E,O), axis 3: (O,O,E)). Requires |a| = |b|.
Rational cr_pair(int axis, const MultiIndex& a, const MultiIndex& b);

/// Brute-force route for the same value: integrate_poly of
/// phi_axis * triple_det(phi^a, phi^b). Test oracle and --oracle CLI path,
/// never the production path.
Rational cr_pair_oracle(int axis, const MultiIndex& a, const MultiIndex& b);

/// phi_axis * det(x, grad0 f, grad0 h) integrated exactly; polynomial-level
/// version of the pairing, defined for arbitrary f, h.
Rational cr_value(int axis, const Polynomial& f, const Polynomial& h);

/// integral <grad f, grad h> dM / |S^2| for restrictions of arbitrary ambient
/// polynomials, via <grad f, grad h> = <grad0 f, grad0 h> - (deg f)(deg h) f h
/// applied to homogeneous pieces on r = 1.
Rational dirichlet_value(const Polynomial& f, const Polynomial& h);

/// Harmonic components H_l, H_{l-2}, ... of a polynomial: each piece
/// satisfies lap0(H_k) = 0 and sum_k r^{l-k} ... reconstructs the input
/// modulo r^2 - 1. Exact rational peel-off, no orthogonalization.
struct HarmonicDecomposition {
  std::vector<std::pair<int, Polynomial>> components;  // sorted by degree, descending
};

HarmonicDecomposition harmonic_decompose(const Polynomial& p);

/// Polynomial representative (mod r^2 = 1) of the sphere Laplacian of the
/// restriction: per homogeneous degree-l piece, (lap0 P) - l(l+m-1) P.
Polynomial sphere_laplacian(const Polynomial& p);

}  // namespace crsphere
