// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"

#include "crsphere/pairings.hpp"

using namespace crsphere;

namespace {

Polynomial phi(int axis) { return Polynomial::variable(axis); }

// Harmonic spanning set of degree l: top components of the decomposed
// monomials. Not linearly independent, which is fine for identity checks.
std::vector<Polynomial> harmonic_span(int l) {
  std::vector<Polynomial> out;
  for (const auto& a : monomial_basis(l)) {
    auto dec = harmonic_decompose(Polynomial::monomial(a));
    for (const auto& [d, h] : dec.components) {
      if (d == l) out.push_back(h);
    }
  }
  return out;
}

std::mt19937 rng(987123);

Polynomial random_harmonic(int l) {
  auto span = harmonic_span(l);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Polynomial h;
  for (const auto& b : span) h += b * Rational(coeff(rng));
  return h;
}

}  // namespace

TEST_SUITE("pairings") {

TEST_CASE("spectral data") {
  auto s = spectral(1, 2, Rational(1));
  CHECK(s.lambda == 2);
  CHECK(s.multiplicity == 3);

  CHECK(spectral(6, 2, Rational(1)).lambda == 42);

  auto s0 = spectral(0, 2, Rational(1));
  CHECK(s0.lambda == 0);
  CHECK(s0.multiplicity == 1);

  // lambda scales like 1/r^2, multiplicity does not depend on r.
  auto sr = spectral(2, 3, make_rational(1, 2));
  CHECK(sr.lambda == Rational(2 * 4 * 4));
  CHECK(sr.multiplicity == spectral(2, 3, Rational(1)).multiplicity);
}

TEST_CASE("dirichlet pairing examples") {
  CHECK(dirichlet_pair(MultiIndex(1, 0, 0), MultiIndex(1, 0, 0)) == make_rational(2, 3));
  CHECK(dirichlet_pair(MultiIndex(1, 0, 0), MultiIndex(0, 1, 0)) == 0);
  CHECK(dirichlet_pair(MultiIndex(2, 0, 0), MultiIndex(0, 2, 0)) == make_rational(-4, 15));
  CHECK_THROWS(dirichlet_pair(MultiIndex(1, 0, 0), MultiIndex(2, 0, 0)));
}

TEST_CASE("dirichlet reduced and pointwise forms agree through degree 6") {
  for (int l = 0; l <= 6; ++l) {
    auto basis = monomial_basis(l);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        CHECK(dirichlet_pair(a, b) == dirichlet_pair_pointwise(a, b));
      }
    }
  }
}

TEST_CASE("dirichlet pairing vanishes off the even parity class") {
  for (int l = 1; l <= 4; ++l) {
    auto basis = monomial_basis(l);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        if (!(a + b).all_even()) CHECK(dirichlet_pair(a, b) == 0);
      }
    }
  }
}

TEST_CASE("cr pairing examples") {
  CHECK(cr_pair(3, MultiIndex(1, 0, 0), MultiIndex(0, 1, 0)) == make_rational(1, 3));
  CHECK(cr_pair(1, MultiIndex(1, 0, 0), MultiIndex(0, 1, 0)) == 0);
  for (int i = 1; i <= 3; ++i) {
    CHECK(cr_pair(i, MultiIndex(2, 1, 0), MultiIndex(2, 1, 0)) == 0);
  }
  CHECK_THROWS(cr_pair(4, MultiIndex(1, 0, 0), MultiIndex(0, 1, 0)));
}

TEST_CASE("cr closed form equals the determinant oracle through degree 5") {
  for (int l = 0; l <= 5; ++l) {
    auto basis = monomial_basis(l);
    for (int i = 1; i <= 3; ++i) {
      for (const auto& a : basis) {
        for (const auto& b : basis) {
          CHECK(cr_pair(i, a, b) == cr_pair_oracle(i, a, b));
        }
      }
    }
  }
}

TEST_CASE("cr pairing is antisymmetric") {
  auto basis = monomial_basis(3);
  for (int i = 1; i <= 3; ++i) {
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        CHECK(cr_pair(i, a, b) == -cr_pair(i, b, a));
      }
    }
  }
}

TEST_CASE("harmonic decomposition examples") {
  auto d1 = harmonic_decompose(phi(1) * phi(2));
  REQUIRE(d1.components.size() == 1);
  CHECK(d1.components[0].first == 2);
  CHECK(d1.components[0].second == phi(1) * phi(2));

  auto d2 = harmonic_decompose(phi(1) * phi(1));
  REQUIRE(d2.components.size() == 2);
  CHECK(d2.components[0].first == 2);
  CHECK(d2.components[0].second ==
        phi(1) * phi(1) - radius_squared() * make_rational(1, 3));
  CHECK(d2.components[1].first == 0);
  CHECK(d2.components[1].second == Polynomial::constant(make_rational(1, 3)));

  auto d3 = harmonic_decompose(phi(1) * phi(1) * phi(1));
  REQUIRE(d3.components.size() == 2);
  CHECK(d3.components[0].first == 3);
  CHECK(d3.components[0].second ==
        phi(1) * phi(1) * phi(1) - radius_squared() * phi(1) * make_rational(3, 5));
  CHECK(d3.components[1].first == 1);
  CHECK(d3.components[1].second == phi(1) * make_rational(3, 5));
}

TEST_CASE("every decomposition component is harmonic and reconstructs on the sphere") {
  for (int l = 2; l <= 6; ++l) {
    for (const auto& a : monomial_basis(l)) {
      Polynomial p = Polynomial::monomial(a);
      auto dec = harmonic_decompose(p);
      Polynomial sum;
      for (const auto& [d, h] : dec.components) {
        CHECK(lap0(h).is_zero());
        sum += h;
      }
      // P - sum vanishes on the sphere, so it integrates to zero against
      // every monomial weight of degree <= l.
      Polynomial diff = p - sum;
      for (int wd = 0; wd <= l; ++wd) {
        for (const auto& w : monomial_basis(wd)) {
          CHECK(integrate_poly(diff * Polynomial::monomial(w)) == 0);
        }
      }
    }
  }
}

TEST_CASE("sphere laplacian examples") {
  CHECK(sphere_laplacian(phi(1)) == phi(1) * Rational(-2));
  CHECK(sphere_laplacian(Polynomial::constant(Rational(9))).is_zero());
  Polynomial h3 = random_harmonic(3);
  REQUIRE_FALSE(h3.is_zero());
  CHECK(sphere_laplacian(h3) == h3 * Rational(-12));
}

TEST_CASE("dirichlet energy of harmonics is +lambda_l times the L2 pairing") {
  for (int l = 1; l <= 4; ++l) {
    Rational lambda(static_cast<long>(l) * (l + 1));
    Polynomial h1 = random_harmonic(l);
    Polynomial h2 = random_harmonic(l);
    CHECK(dirichlet_value(h1, h2) == lambda * integrate_poly(h1 * h2));
    CHECK(dirichlet_value(h1, h1) >= 0);
  }
  // Distinct degrees of the same parity are gradient-orthogonal.
  CHECK(dirichlet_value(random_harmonic(1), random_harmonic(3)) == 0);
  CHECK(dirichlet_value(random_harmonic(2), random_harmonic(4)) == 0);
}

TEST_CASE("bracket with a coordinate stays in the same eigenspace") {
  for (int l = 1; l <= 5; ++l) {
    auto span = harmonic_span(l);
    for (int i = 1; i <= 3; ++i) {
      for (const auto& h : span) {
        Polynomial bracket = triple_det(phi(i), h);
        if (bracket.is_zero()) continue;
        auto dec = harmonic_decompose(bracket);
        REQUIRE(dec.components.size() == 1);
        CHECK(dec.components[0].first == l);
        CHECK(dec.components[0].second == bracket);
      }
    }
  }
}

TEST_CASE("trilinear pairing vanishes across distinct eigenspaces") {
  for (int l = 0; l <= 5; ++l) {
    for (int s = 0; s < l; ++s) {
      Polynomial h = random_harmonic(l);
      Polynomial g = s == 0 ? Polynomial::constant(Rational(2)) : random_harmonic(s);
      for (int i = 1; i <= 3; ++i) {
        CHECK(cr_value(i, h, g) == 0);
      }
    }
  }
}

TEST_CASE("trilinear pairing is alternating in its three functions") {
  for (int trial = 0; trial < 5; ++trial) {
    Polynomial f1 = random_harmonic(1 + trial % 3);
    Polynomial f2 = random_harmonic(1 + (trial + 1) % 3);
    Polynomial f3 = random_harmonic(1 + (trial + 2) % 3);
    auto eta = [](const Polynomial& a, const Polynomial& b, const Polynomial& c) {
      return integrate_poly(a * triple_det(b, c));
    };
    Rational base = eta(f1, f2, f3);
    CHECK(eta(f1, f3, f2) == -base);
    CHECK(eta(f2, f1, f3) == -base);
    CHECK(eta(f3, f2, f1) == -base);
    CHECK(eta(f2, f3, f1) == base);
    CHECK(eta(f3, f1, f2) == base);
  }
}

}  // TEST_SUITE
