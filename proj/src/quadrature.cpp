// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crsphere {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double eps = 1e-15;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev estimate of the i-th root, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= eps) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

QuadratureRule QuadratureRule::product_rule(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("quadrature sizes must be positive");
  QuadratureRule rule;
  gauss_legendre(n, rule.z_nodes, rule.z_weights);
  rule.azimuthal_points = k;
  rule.exactness_degree = std::min(2 * n - 1, k - 1);
  return rule;
}

double QuadratureRule::integrate(const Polynomial& p) const {
  // dA = dz dtheta on the unit sphere; the uniform rule in theta is exact
  // for trigonometric degree < k and Gauss-Legendre handles the z factor.
  const int k = azimuthal_points;
  const double dtheta = 2.0 * std::numbers::pi / k;
  double sum = 0.0;
  for (size_t iz = 0; iz < z_nodes.size(); ++iz) {
    double z = z_nodes[iz];
    double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    double ring = 0.0;
    for (int it = 0; it < k; ++it) {
      double theta = dtheta * it;
      double point[3] = {rho * std::cos(theta), rho * std::sin(theta), z};
      ring += p.evaluate(point);
    }
    sum += z_weights[iz] * ring * dtheta;
  }
  return sum;
}

double quad_integrate(const Polynomial& p, int n, int k) {
  return QuadratureRule::product_rule(n, k).integrate(p);
}

}  // namespace crsphere
