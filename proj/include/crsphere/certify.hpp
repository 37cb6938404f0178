// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "crsphere/matrix.hpp"
#include "crsphere/qform.hpp"

namespace crsphere {

/// Signature (n_pos, n_neg, n_zero) of a symmetric form; invariant under
/// congruence by Sylvester's law, so any exact diagonalization certifies it.
struct Inertia {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;

  bool operator==(const Inertia& other) const {
    return n_pos == other.n_pos && n_neg == other.n_neg && n_zero == other.n_zero;
  }
  std::string to_string() const;
};

/// Exact congruence diagonalization record: transform^T Q transform is
/// diagonal with the recorded entries. Re-checkable by multiplication alone.
struct CongruenceRecord {
  RatMatrix transform;
  std::vector<Rational> diagonal;
  std::vector<int> pivot_sequence;
};

/// Exact inertia by symmetric Gaussian elimination with diagonal pivoting
/// (largest |value| pivot, ties by index; exact zero tests). A fully zero
/// active diagonal with a nonzero off-diagonal entry is handled by the
/// 2x2 hyperbolic rule, contributing one positive and one negative entry.
/// Throws std::invalid_argument on asymmetric input.
Inertia inertia(const RatMatrix& q, CongruenceRecord* record = nullptr);
Inertia inertia(const SymQForm& q, CongruenceRecord* record = nullptr);

/// Floating-point spectrum by cyclic Jacobi rotations, run until the
/// off-diagonal Frobenius norm drops below tol * ||Q||_F. Eigenvalues sorted
/// descending, eigenvectors[k] belongs to eigenvalues[k]. Non-convergence
/// within the sweep budget throws std::runtime_error.
struct JacobiResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  int sweeps = 0;
};

JacobiResult jacobi_spectrum(const RatMatrix& q, double tol = 1e-13);

/// Exact rational basis of the nullspace {v : Qv = 0}; independent row
/// reduction, not the congruence path.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& q);

/// Machine-checkable stability verdict for a symmetric rational form.
/// Unstable: an integer vector v with exact Q(v) < 0 (found by scaling and
/// rounding the most negative Jacobi eigenvector, the published
/// diagonalize-then-evaluate-exactly workflow). Stable: the congruence
/// record with nonnegative diagonal plus a rational kernel basis.
struct Certificate {
  enum class Kind { kStable, kUnstable };
  Kind kind = Kind::kStable;

  // unstable
  std::vector<Integer> witness;
  Rational witness_value;
  int scale_used = 0;

  // stable
  CongruenceRecord record;
  std::vector<std::vector<Rational>> kernel;
};

/// pre: q symmetric. max_scale bounds the rounding scales tried (the default
/// 10..20 covers the published choice of 10); if direct rounding fails at
/// every scale, a bounded +-1 lattice search around the last rounding runs
/// before giving up with std::runtime_error.
Certificate instability_certificate(const RatMatrix& q, int max_scale = 20);

/// Re-verifies a certificate against q using matrix-vector products only.
bool verify_certificate(const RatMatrix& q, const Certificate& cert);

}  // namespace crsphere
