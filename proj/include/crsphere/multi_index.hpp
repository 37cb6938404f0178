// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace crsphere {

/// Exponent vector a = (a_1, ..., a_{m+1}) of a monomial phi^a in the ambient
/// coordinate functions. Three coordinates unless stated otherwise.
class MultiIndex {
 public:
  MultiIndex() : exponents_(3, 0) {}
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(int a1, int a2, int a3) : exponents_{a1, a2, a3} {}

  static MultiIndex zero(int dims = 3) { return MultiIndex(std::vector<int>(dims, 0)); }
  /// epsilon_i, 1-based coordinate axis.
  static MultiIndex unit(int axis, int dims = 3);

  int dims() const { return static_cast<int>(exponents_.size()); }
  int operator[](int i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }

  int degree() const;

  /// Per-coordinate parity bits, true = odd exponent.
  std::vector<bool> parity() const;
  bool all_even() const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// a + sum_i delta_i * epsilon_i; nullopt when any exponent would go
  /// negative (the integral recursion treats such terms as absent).
  std::optional<MultiIndex> shifted(const std::vector<int>& deltas) const;

  bool operator==(const MultiIndex& other) const { return exponents_ == other.exponents_; }
  bool operator!=(const MultiIndex& other) const { return !(*this == other); }
  /// Graded lexicographic order (degree first, then x1 > x2 > x3); fixes the
  /// row/column order of every matrix this library emits.
  bool operator<(const MultiIndex& other) const;

  std::string to_string() const;  // "(2,1,1)"

 private:
  std::vector<int> exponents_;
};

/// "(E,O,O)"-style parity signature.
std::string parity_string(const MultiIndex& a);

/// All monomials of the given total degree, in the global order.
std::vector<MultiIndex> monomial_basis(int degree, int dims = 3);

/// Dimension of the degree-l monomial space on 3 coordinates, (l+1)(l+2)/2.
int monomial_count(int degree);

}  // namespace crsphere
