// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <vector>

#include "crsphere/multi_index.hpp"
#include "crsphere/rational.hpp"

namespace crsphere {

/// Sparse multivariate polynomial over the rationals in the ambient
/// coordinates (phi_1, phi_2, phi_3). Zero coefficients are never stored, so
/// equality of term maps is equality of polynomials.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const MultiIndex& a, const Rational& coeff = Rational(1));
  /// The coordinate function phi_axis (1-based).
  static Polynomial variable(int axis, int dims = 3);

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  Rational coeff(const MultiIndex& a) const;
  void add_term(const MultiIndex& a, const Rational& coeff);

  /// Max total degree over stored terms; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int degree) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// d/dx_axis (1-based), exact.
  Polynomial derivative(int axis) const;

  double evaluate(std::span<const double> point) const;

  std::string to_string() const;

 private:
  std::map<MultiIndex, Rational> terms_;
};

/// Ambient gradient (dP/dx_1, dP/dx_2, dP/dx_3).
std::vector<Polynomial> grad0(const Polynomial& p);

/// Ambient Laplacian sum_i d^2 P / dx_i^2.
Polynomial lap0(const Polynomial& p);

/// det(x, grad0 f, grad0 h) expanded as an exact polynomial. Restricted to
/// the unit sphere this equals <J grad f, grad h>; the orientation is the one
/// that makes the bracket of phi_1 with phi_2 come out as +phi_3.
Polynomial triple_det(const Polynomial& f, const Polynomial& h);

/// x_1^2 + x_2^2 + x_3^2.
Polynomial radius_squared(int dims = 3);

}  // namespace crsphere
