// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace crsphere {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("multi-index needs at least one exponent");
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent in multi-index");
  }
}

MultiIndex MultiIndex::unit(int axis, int dims) {
  if (axis < 1 || axis > dims) throw std::invalid_argument("axis out of range");
  std::vector<int> e(dims, 0);
  e[axis - 1] = 1;
  return MultiIndex(e);
}

int MultiIndex::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

std::vector<bool> MultiIndex::parity() const {
  std::vector<bool> odd(exponents_.size());
  for (size_t i = 0; i < exponents_.size(); ++i) odd[i] = exponents_[i] % 2 != 0;
  return odd;
}

bool MultiIndex::all_even() const {
  for (int e : exponents_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dims() != other.dims()) throw std::invalid_argument("multi-index dimension mismatch");
  std::vector<int> e(exponents_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return MultiIndex(e);
}

std::optional<MultiIndex> MultiIndex::shifted(const std::vector<int>& deltas) const {
  if (deltas.size() != exponents_.size()) throw std::invalid_argument("delta dimension mismatch");
  std::vector<int> e(exponents_);
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] += deltas[i];
    if (e[i] < 0) return std::nullopt;
  }
  return MultiIndex(e);
}

bool MultiIndex::operator<(const MultiIndex& other) const {
  if (dims() != other.dims()) return dims() < other.dims();
  int da = degree(), db = other.degree();
  if (da != db) return da < db;
  // Within a degree: lexicographic with x1 > x2 > x3, so larger leading
  // exponents come first.
  return exponents_ > other.exponents_;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < exponents_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exponents_[i]);
  }
  return s + ")";
}

std::string parity_string(const MultiIndex& a) {
  std::string s = "(";
  auto odd = a.parity();
  for (size_t i = 0; i < odd.size(); ++i) {
    if (i) s += ",";
    s += odd[i] ? "O" : "E";
  }
  return s + ")";
}

static void enumerate(int remaining, int slot, int dims, std::vector<int>& cur,
                      std::vector<MultiIndex>& out) {
  if (slot == dims - 1) {
    cur[slot] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[slot] = e;
    enumerate(remaining - e, slot + 1, dims, cur, out);
  }
}

std::vector<MultiIndex> monomial_basis(int degree, int dims) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<MultiIndex> out;
  std::vector<int> cur(dims, 0);
  enumerate(degree, 0, dims, cur, out);
  return out;  // descending lex = global order within the degree
}

int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

}  // namespace crsphere
