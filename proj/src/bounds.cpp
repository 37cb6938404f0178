// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace crsphere {

bool sqrt_scaled_le(const Rational& p, const Rational& q, const Rational& t) {
  if (p < 0 || q < 0) throw std::invalid_argument("sqrt comparison needs nonnegative p, q");
  if (t < 0) return false;
  return p * p * q <= t * t;
}

BoundReport rayleigh_bound(int l, int s, int m, int n, const Rational& theta) {
  if (l < 1 || s < 1) throw std::invalid_argument("eigenspace degrees must be >= 1");
  if (m < 2 || n < 2) throw std::invalid_argument("need m >= 2 and n >= 2");
  if (theta < 0) throw std::invalid_argument("theta must be nonnegative");

  BoundReport rep;
  rep.l = l;
  rep.s = s;
  rep.m = m;
  rep.n = n;
  rep.theta = theta;
  rep.lambda_l = Rational(static_cast<long>(l) * (l + m - 1));
  rep.lambda_s = Rational(static_cast<long>(s) * (s + m - 1));

  long msq = static_cast<long>(m) * m;
  long nsq = static_cast<long>(n - 2) * (n - 2);
  rep.eigenvalue_sufficiency = rep.lambda_l >= Rational(msq * nsq);

  rep.coeff_one_space_sq = Rational(msq * nsq) * theta * theta / rep.lambda_l;
  rep.coeff_one_space = std::sqrt(rep.coeff_one_space_sq.get_d());
  rep.stable_flag = (n == 2) || rep.coeff_one_space_sq <= 1;

  // c (1/sqrt(lambda_l) + 1/sqrt(lambda_s)) <= 1, c = m theta, decided by
  // clearing the roots:  c^2 (ll + ls + 2 sqrt(ll ls)) <= ll ls.
  Rational c = Rational(m) * theta;
  rep.coeff_two_spaces =
      c.get_d() * (1.0 / std::sqrt(rep.lambda_l.get_d()) + 1.0 / std::sqrt(rep.lambda_s.get_d()));
  Rational csq = c * c;
  Rational rest = rep.lambda_l * rep.lambda_s - csq * (rep.lambda_l + rep.lambda_s);
  rep.two_space_le_one = sqrt_scaled_le(2 * csq, rep.lambda_l * rep.lambda_s, rest);

  return rep;
}

}  // namespace crsphere
