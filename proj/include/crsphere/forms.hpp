// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <vector>

#include "crsphere/matrix.hpp"
#include "crsphere/pairings.hpp"
#include "crsphere/polynomial.hpp"
#include "crsphere/qform.hpp"

namespace crsphere {

/// One coupling of the associative calibration on R^7 restricted to S^2:
/// the pair (f_alpha, f_beta) is weighted by sign * phi_axis in the
/// four-function inequality. The six entries fix the sign pattern
/// +phi_1 (45, 67), +phi_2 (46, -57), -phi_3 (47, 56).
struct CalibrationEntry {
  int alpha;
  int beta;
  int axis;
  int sign;  // +1 or -1
};

const std::array<CalibrationEntry, 6>& calibration_table();

/// Coefficient vector A^alpha_a of a 4-tuple of degree-l monomial
/// combinations f_alpha = sum_{|a|=l} A^alpha_a phi^a, alpha in {4,5,6,7}.
struct CoeffVector {
  int degree = 0;
  std::map<std::pair<int, MultiIndex>, Rational> entries;

  /// Dense coordinates in the long_form(degree) basis order.
  std::vector<Rational> to_dense() const;
};

/// N x N Gram matrix of Dirichlet pairings on the degree-l monomial basis.
SymQForm gram_matrix(int l);

/// N x N antisymmetric matrix T^axis[a][b] = cr_pair(axis, a, b) on the
/// degree-l monomial basis.
RatMatrix cr_tensor(int axis, int l);

/// The 4N x 4N long-form stability matrix Q on coefficient vectors:
/// Q = blockdiag(G, G, G, G) minus the symmetrized calibration coupling
/// 4 [T^1 (A^4 A^5 + A^6 A^7) + T^2 (A^4 A^6 - A^5 A^7) - T^3 (A^4 A^7 + A^5 A^6)].
/// The four-function inequality holds on the degree-l space iff Q is PSD.
SymQForm long_form(int l);

/// The 2N x 2N pair form Q on (f, h) coefficients:
/// blockdiag(G, G) - sym(4 T^axis) coupling f to h. PSD-ness of this form is
/// the symmetrized two-function inequality on the degree-l space.
SymQForm short_form(int axis, int l);

/// Connected components of the coupling graph (edges = nonzero off-diagonal
/// entries). Q is PSD iff each block is. Blocks come back sorted by smallest
/// contained basis position, indices ascending within a block.
std::vector<std::vector<int>> block_decompose(const SymQForm& q);

/// The explicit 10-variable quadratic F[a,b,c,x,y,z,w,u,v,g] whose
/// nonnegativity is one of the two independent degree-3 inequalities.
Rational f_polynomial(const std::vector<Rational>& v);

/// Constant 10x10 Hessian of F (integer entries), by exact polarization of
/// f_polynomial.
RatMatrix f_hessian();

/// Long-form basis labels corresponding to the F variables, in F order:
/// a=A4(003), b=A5(030), c=A6(300), x=A4(201), y=A4(021), z=A5(012),
/// w=A5(210), u=A6(120), v=A6(102), g=A7(111).
const std::vector<BasisLabel>& f_variable_labels();

/// The published 10-vector tested against F (value -138).
std::vector<Rational> f_paper_vector();

/// One cell of the F-variable block of long_form(3) whose exactly computed
/// value differs from the published quadratic (s/2 * Hess F with the block
/// scale s). The printed degree-3 expansion dropped these couplings: the
/// pairs appear in its own parity enumeration but not in the displayed sums.
struct BlockDiscrepancy {
  int f_row = 0;  // indices into the F variable order a,b,c,x,y,z,w,u,v,g
  int f_col = 0;
  BasisLabel row, col;
  Rational assembled;  // exact entry of the assembled block
  Rational published;  // (s/2) * published hessian entry
};

/// Entrywise comparison of the 10x10 block against the scaled published
/// hessian; empty would mean the printed F is complete.
std::vector<BlockDiscrepancy> f_block_discrepancies();

/// Embeds a 10-vector of F variables into the 40-dimensional long_form(3)
/// coordinate space (zeros elsewhere).
std::vector<Rational> embed_f_variables(const std::vector<Rational>& v10);

/// Coefficient extraction of four homogeneous degree-l polynomials into the
/// global basis order. Throws if any f_alpha is nonzero away from degree l.
CoeffVector embed_functions(const Polynomial& f4, const Polynomial& f5, const Polynomial& f6,
                            const Polynomial& f7, int l);

/// Polynomial-level gap of the four-function inequality: Dirichlet energy of
/// the tuple minus the calibration coupling. Works for arbitrary polynomials
/// (mixed eigenspaces included) and is independent of the matrix assembly, so
/// it doubles as an oracle for long_form evaluation.
Rational long_gap_poly(const std::array<Polynomial, 4>& f);

/// The degree-3 counterexample 4-tuple as printed:
///   f4 = 3 phi3^3 + 4 phi1^2 phi3 + 4 phi2^2 phi3
///   f5 = -4 phi2^3 - 4 phi2 phi3^2 - 3 phi1^2 phi2
///   f6 = -phi1^3 - phi1 phi2^2 - 2 phi1 phi3^2
///   f7 = phi1 phi2 phi3
/// Note the printed f4 carries coefficient 4 on phi1^2 phi3 while the tested
/// 10-vector has 3 in that slot; callers evaluate both candidates.
std::array<Polynomial, 4> counterexample_functions();

}  // namespace crsphere
