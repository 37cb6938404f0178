// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace crsphere {

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.add_term(MultiIndex::zero(), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& a, const Rational& coeff) {
  Polynomial p;
  p.add_term(a, coeff);
  return p;
}

Polynomial Polynomial::variable(int axis, int dims) {
  return monomial(MultiIndex::unit(axis, dims), Rational(1));
}

Rational Polynomial::coeff(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& a, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(a, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [a, c] : terms_) {
    if (d < 0) {
      d = a.degree();
    } else if (a.degree() != d) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out;
  for (const auto& [a, c] : terms_) {
    if (a.degree() == degree) out.add_term(a, c);
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out(*this);
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out(*this);
  out -= other;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      out.add_term(a + b, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial out;
  if (scalar == 0) return out;
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, c * scalar);
  return out;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial out;
  for (const auto& [a, c] : terms_) {
    int e = a[axis - 1];
    if (e == 0) continue;
    std::vector<int> deltas(a.dims(), 0);
    deltas[axis - 1] = -1;
    out.add_term(*a.shifted(deltas), c * e);
  }
  return out;
}

double Polynomial::evaluate(std::span<const double> point) const {
  double sum = 0.0;
  for (const auto& [a, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < a.dims(); ++i) {
      for (int e = 0; e < a[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += crsphere::to_string(c) + "*phi^" + a.to_string();
  }
  return s;
}

std::vector<Polynomial> grad0(const Polynomial& p) {
  int dims = 3;
  if (!p.terms().empty()) dims = p.terms().begin()->first.dims();
  std::vector<Polynomial> g;
  g.reserve(dims);
  for (int i = 1; i <= dims; ++i) g.push_back(p.derivative(i));
  return g;
}

Polynomial lap0(const Polynomial& p) {
  int dims = 3;
  if (!p.terms().empty()) dims = p.terms().begin()->first.dims();
  Polynomial out;
  for (int i = 1; i <= dims; ++i) out += p.derivative(i).derivative(i);
  return out;
}

Polynomial triple_det(const Polynomial& f, const Polynomial& h) {
  auto gf = grad0(f);
  auto gh = grad0(h);
  if (gf.size() != 3 || gh.size() != 3) {
    throw std::invalid_argument("triple_det is specific to three ambient coordinates");
  }
  Polynomial out;
  // Cofactor expansion along the coordinate row (x1, x2, x3).
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    Polynomial minor = gf[j] * gh[k] - gf[k] * gh[j];
    out += Polynomial::variable(i + 1) * minor;
  }
  return out;
}

Polynomial radius_squared(int dims) {
  Polynomial out;
  for (int i = 1; i <= dims; ++i) {
    out += Polynomial::variable(i, dims) * Polynomial::variable(i, dims);
  }
  return out;
}

}  // namespace crsphere
