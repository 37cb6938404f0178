// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "crsphere/rational.hpp"

namespace crsphere {

/// Dense rational matrix. Dimensions here stay small (<= 84) so no sparsity.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator*(const Rational& scalar) const;
  RatMatrix operator-(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  /// v^T A v.
  Rational quad(const std::vector<Rational>& v) const;

  RatMatrix submatrix(const std::vector<int>& indices) const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace crsphere
