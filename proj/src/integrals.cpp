// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/integrals.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace crsphere {

namespace {

// Process-wide memo of (m, a) -> exact moment. Entries are immutable once
// written; the lock serializes writers, readers copy out under it.
class IntegralCache {
 public:
  static IntegralCache& instance() {
    static IntegralCache cache;
    return cache;
  }

  bool lookup(int m, const MultiIndex& a, Rational& out) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = values_.find({m, a});
    if (it == values_.end()) return false;
    out = it->second;
    return true;
  }

  void store(int m, const MultiIndex& a, const Rational& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    values_.emplace(std::make_pair(m, a), value);
  }

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<int, MultiIndex>, Rational> values_;
};

Rational integrate_even(const MultiIndex& a, int m) {
  // Parity has been ruled out by the caller; a is (E,...,E).
  int l = a.degree();
  if (l == 0) return Rational(1);

  Rational cached;
  if (IntegralCache::instance().lookup(m, a, cached)) return cached;

  Rational sum(0);
  Rational scale(1, static_cast<long>(l) * (l + m - 1));
  for (int i = 0; i < a.dims(); ++i) {
    int e = a[i];
    if (e < 2) continue;
    std::vector<int> deltas(a.dims(), 0);
    deltas[i] = -2;
    sum += Rational(static_cast<long>(e) * (e - 1)) * integrate_even(*a.shifted(deltas), m);
  }
  Rational value = sum * scale;
  IntegralCache::instance().store(m, a, value);
  return value;
}

Integer double_factorial(int n) {
  // (-1)!! = 1 by convention.
  Integer out(1);
  for (int k = n; k >= 2; k -= 2) out *= k;
  return out;
}

}  // namespace

Rational integrate_monomial(const MultiIndex& a, int m) {
  if (m < 2) throw std::invalid_argument("sphere dimension must be >= 2");
  if (a.dims() > m + 1) {
    throw std::invalid_argument("multi-index has more coordinates than the ambient space");
  }
  if (!a.all_even()) return Rational(0);
  return integrate_even(a, m);
}

Rational integrate_poly(const Polynomial& p, int m) {
  Rational sum(0);
  for (const auto& [a, c] : p.terms()) sum += c * integrate_monomial(a, m);
  return sum;
}

Rational factorial_oracle(const MultiIndex& a) {
  if (!a.all_even()) throw std::invalid_argument("factorial oracle takes all-even indices");
  Integer num(1);
  for (int i = 0; i < a.dims(); ++i) num *= double_factorial(a[i] - 1);
  Rational value(num, double_factorial(a.degree() + 1));
  value.canonicalize();
  return value;
}

Rational phi_squared_integral(int m) { return Rational(1, m + 1); }

}  // namespace crsphere
