// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/pairings.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace crsphere {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void require_equal_degrees(const MultiIndex& a, const MultiIndex& b, const char* what) {
  if (a.dims() != b.dims() || a.degree() != b.degree()) {
    throw std::invalid_argument(std::string(what) + ": multi-indices must have equal degree");
  }
}

// One term  coeff * I(a + b + deltas), with out-of-range shifts contributing
// nothing (their coefficients vanish identically anyway).
Rational shifted_term(long coeff, const MultiIndex& ab, const std::vector<int>& deltas) {
  if (coeff == 0) return Rational(0);
  auto idx = ab.shifted(deltas);
  if (!idx) return Rational(0);
  return Rational(coeff) * integrate_monomial(*idx);
}

}  // namespace

SpectralData spectral(int l, int m, const Rational& r) {
  if (l < 0) throw std::invalid_argument("degree must be nonnegative");
  if (m < 2) throw std::invalid_argument("sphere dimension must be >= 2");
  if (r <= 0) throw std::invalid_argument("radius must be positive");
  SpectralData out;
  out.l = l;
  out.m = m;
  out.r = r;
  out.lambda = Rational(static_cast<long>(l) * (l + m - 1)) / (r * r);
  out.multiplicity = binomial(m + l, m) - binomial(m + l - 2, m);
  return out;
}

Rational dirichlet_pair(const MultiIndex& a, const MultiIndex& b) {
  require_equal_degrees(a, b, "dirichlet_pair");
  int l = a.degree();
  MultiIndex ab = a + b;
  Rational sum(0);
  for (int i = 0; i < a.dims(); ++i) {
    long ai = a[i], bi = b[i];
    long num = l * ((ai + bi) - (ai - bi) * (ai - bi)) + 2 * ai * bi;
    if (num == 0) continue;
    std::vector<int> deltas(a.dims(), 0);
    deltas[i] = -2;
    auto idx = ab.shifted(deltas);
    if (!idx) continue;
    Rational weight(num, 2 * (2 * l + 1));
    weight.canonicalize();
    sum += weight * integrate_monomial(*idx);
  }
  return sum;
}

Rational dirichlet_pair_pointwise(const MultiIndex& a, const MultiIndex& b) {
  require_equal_degrees(a, b, "dirichlet_pair");
  long l = a.degree();
  MultiIndex ab = a + b;
  Rational sum = Rational(-l * l) * integrate_monomial(ab);
  for (int i = 0; i < a.dims(); ++i) {
    long prod = static_cast<long>(a[i]) * b[i];
    if (prod == 0) continue;
    std::vector<int> deltas(a.dims(), 0);
    deltas[i] = -2;
    auto idx = ab.shifted(deltas);
    if (!idx) continue;
    sum += Rational(prod) * integrate_monomial(*idx);
  }
  return sum;
}

Rational cr_pair(int axis, const MultiIndex& a, const MultiIndex& b) {
  require_equal_degrees(a, b, "cr_pair");
  if (a.dims() != 3) throw std::invalid_argument("cr_pair is specific to S^2");
  long a1 = a[0], a2 = a[1], a3 = a[2];
  long b1 = b[0], b2 = b[1], b3 = b[2];
  MultiIndex ab = a + b;
  switch (axis) {
    case 1:
      return shifted_term(a1 * b2 - a2 * b1, ab, {0, -1, 1}) +
             shifted_term(-a1 * b3 + a3 * b1, ab, {0, 1, -1}) +
             shifted_term(a2 * b3 - a3 * b2, ab, {2, -1, -1});
    case 2:
      return shifted_term(a2 * b3 - a3 * b2, ab, {1, 0, -1}) +
             shifted_term(-a2 * b1 + a1 * b2, ab, {-1, 0, 1}) +
             shifted_term(a3 * b1 - a1 * b3, ab, {-1, 2, -1});
    case 3:
      return shifted_term(a3 * b1 - a1 * b3, ab, {-1, 1, 0}) +
             shifted_term(-a3 * b2 + a2 * b3, ab, {1, -1, 0}) +
             shifted_term(a1 * b2 - a2 * b1, ab, {-1, -1, 2});
    default:
      throw std::invalid_argument("axis must be 1, 2 or 3");
  }
}

Rational cr_pair_oracle(int axis, const MultiIndex& a, const MultiIndex& b) {
  return cr_value(axis, Polynomial::monomial(a), Polynomial::monomial(b));
}

Rational cr_value(int axis, const Polynomial& f, const Polynomial& h) {
  return integrate_poly(Polynomial::variable(axis) * triple_det(f, h));
}

Rational dirichlet_value(const Polynomial& f, const Polynomial& h) {
  auto gf = grad0(f);
  auto gh = grad0(h);
  Polynomial integrand;
  for (size_t i = 0; i < gf.size(); ++i) integrand += gf[i] * gh[i];
  // Radial correction per pair of homogeneous pieces: on r = 1 the radial
  // derivative of a degree-l piece is l times the piece.
  int df = f.degree(), dh = h.degree();
  for (int lf = 0; lf <= df; ++lf) {
    Polynomial pf = f.homogeneous_part(lf);
    if (pf.is_zero()) continue;
    for (int lh = 0; lh <= dh; ++lh) {
      Polynomial ph = h.homogeneous_part(lh);
      if (ph.is_zero()) continue;
      integrand -= pf * ph * Rational(static_cast<long>(lf) * lh);
    }
  }
  return integrate_poly(integrand);
}

HarmonicDecomposition harmonic_decompose(const Polynomial& p) {
  HarmonicDecomposition out;
  if (p.is_zero()) return out;
  int dims = p.terms().begin()->first.dims();
  Polynomial r2 = radius_squared(dims);

  // Peel-off for one homogeneous piece: decompose lap0(P) recursively, divide
  // its degree-(l-2k) component by c_k = 2k (2l - 2k + dims - 2) to recover
  // H_{l-2k}, then H_l is what is left after subtracting r^{2k} H_{l-2k}.
  std::map<int, Polynomial> parts;
  auto add_part = [&parts](int d, const Polynomial& h) {
    auto [it, inserted] = parts.emplace(d, h);
    if (!inserted) it->second += h;
  };

  std::function<void(const Polynomial&, int, std::map<int, Polynomial>&)> peel =
      [&](const Polynomial& q, int l, std::map<int, Polynomial>& into) {
        if (q.is_zero()) return;
        Polynomial lap = lap0(q);
        if (lap.is_zero()) {
          auto [it, inserted] = into.emplace(l, q);
          if (!inserted) it->second += q;
          return;
        }
        std::map<int, Polynomial> sub;
        peel(lap, l - 2, sub);
        Polynomial top = q;
        Polynomial r2k = Polynomial::constant(Rational(1));
        for (int k = 1; 2 * k <= l; ++k) {
          r2k = r2k * r2;
          auto it = sub.find(l - 2 * k);
          if (it == sub.end()) continue;
          Rational ck(2L * k * (2L * l - 2 * k + dims - 2));
          Polynomial hk = it->second * (Rational(1) / ck);
          auto [dst, inserted] = into.emplace(l - 2 * k, hk);
          if (!inserted) dst->second += hk;
          top -= r2k * hk;
        }
        if (!top.is_zero()) {
          auto [dst, inserted] = into.emplace(l, top);
          if (!inserted) dst->second += top;
        }
      };

  for (int l = 0; l <= p.degree(); ++l) {
    Polynomial piece = p.homogeneous_part(l);
    if (piece.is_zero()) continue;
    std::map<int, Polynomial> into;
    peel(piece, l, into);
    for (auto& [d, h] : into) add_part(d, h);
  }

  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!it->second.is_zero()) out.components.emplace_back(it->first, it->second);
  }
  return out;
}

Polynomial sphere_laplacian(const Polynomial& p) {
  if (p.is_zero()) return Polynomial::zero();
  int dims = p.terms().begin()->first.dims();
  int m = dims - 1;
  Polynomial out;
  for (int l = 0; l <= p.degree(); ++l) {
    Polynomial piece = p.homogeneous_part(l);
    if (piece.is_zero()) continue;
    out += lap0(piece) - piece * Rational(static_cast<long>(l) * (l + m - 1));
  }
  return out;
}

}  // namespace crsphere
