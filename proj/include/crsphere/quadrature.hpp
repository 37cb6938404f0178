// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "crsphere/polynomial.hpp"

namespace crsphere {

/// Product quadrature on S^2: Gauss-Legendre in z on [-1,1] times a uniform
/// azimuthal rule. Exact (to roundoff) for polynomial integrands of total
/// degree <= min(2n-1, k-1). Only ever used to cross-check the exact
/// integration engine; nothing downstream consumes these values.
struct QuadratureRule {
  std::vector<double> z_nodes;
  std::vector<double> z_weights;
  int azimuthal_points = 0;
  int exactness_degree = 0;

  static QuadratureRule product_rule(int n, int k);

  /// Integral over S^2 in measure units (total area 4*pi).
  double integrate(const Polynomial& p) const;
};

/// One-shot helper: product_rule(n, k).integrate(p).
double quad_integrate(const Polynomial& p, int n, int k);

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on the
/// Legendre recurrence, Chebyshev initial guesses, 1e-15 tolerance.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace crsphere
