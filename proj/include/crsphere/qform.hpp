// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "crsphere/matrix.hpp"
#include "crsphere/multi_index.hpp"
#include "crsphere/polynomial.hpp"

namespace crsphere {

/// [{exponents: [a1,a2,a3], coeff: "p/q"}, ...] sorted by the global
/// monomial order.
nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);

/// Row/column label of a quadratic form: which function slot (alpha) and
/// which monomial. alpha is 4..7 for the four-function stability form, 0/1
/// for the (f, h) slots of the pair form, and 0 alone for single-function
/// forms like the Gram matrix.
struct BasisLabel {
  int alpha = 0;
  MultiIndex index;

  bool operator==(const BasisLabel& other) const {
    return alpha == other.alpha && index == other.index;
  }
  bool operator<(const BasisLabel& other) const {
    if (alpha != other.alpha) return alpha < other.alpha;
    return index < other.index;
  }
  std::string to_string() const;
};

/// Labeled symmetric rational matrix, all entries in units of |S^2|.
struct SymQForm {
  std::vector<BasisLabel> basis;
  RatMatrix matrix;

  int dim() const { return static_cast<int>(basis.size()); }
  /// Index of a label in the basis; throws if absent.
  int index_of(const BasisLabel& label) const;
  Rational evaluate(const std::vector<Rational>& v) const { return matrix.quad(v); }

  /// {basis: [...], entries: [[row, col, "p/q"], ...]} with the nonzero
  /// entries of the upper triangle, row-major.
  nlohmann::ordered_json to_json() const;
  static SymQForm from_json(const nlohmann::ordered_json& j);
  /// Dense grid of "p/q" cells with label headers.
  std::string to_csv() const;
};

}  // namespace crsphere
