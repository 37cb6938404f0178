// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/matrix.hpp"

#include <stdexcept>

namespace crsphere {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) == 0) continue;
        out.at(i, j) += aik * other.at(k, j);
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::operator*(const Rational& scalar) const {
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matvec shape mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) == 0 || v[j] == 0) continue;
      out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

Rational RatMatrix::quad(const std::vector<Rational>& v) const {
  auto qv = apply(v);
  Rational out(0);
  for (int i = 0; i < rows_; ++i) {
    if (v[i] == 0 || qv[i] == 0) continue;
    out += v[i] * qv[i];
  }
  return out;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& indices) const {
  RatMatrix out(static_cast<int>(indices.size()), static_cast<int>(indices.size()));
  for (size_t i = 0; i < indices.size(); ++i) {
    for (size_t j = 0; j < indices.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = at(indices[i], indices[j]);
    }
  }
  return out;
}

}  // namespace crsphere
