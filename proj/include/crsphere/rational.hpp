// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>

namespace crsphere {

/// Exact rational scalar. Every sphere integral, pairing and matrix entry in
/// this library is one of these; floating point only ever appears in the
/// Jacobi eigensolver and the quadrature cross-check. GMP keeps the value
/// canonical (gcd(|num|, den) = 1, den >= 1) through arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or
/// zero denominator.
Rational rational_from_string(const std::string& text);

/// Renders as "p/q", with "/q" omitted when the denominator is 1.
std::string to_string(const Rational& q);

/// Shortest-faithful decimal for report output (17 significant digits).
std::string format_double(double x);

}  // namespace crsphere
