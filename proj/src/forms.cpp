// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace crsphere {

const std::array<CalibrationEntry, 6>& calibration_table() {
  static const std::array<CalibrationEntry, 6> table = {{
      {4, 5, 1, +1},
      {6, 7, 1, +1},
      {4, 6, 2, +1},
      {5, 7, 2, -1},
      {4, 7, 3, -1},
      {5, 6, 3, -1},
  }};
  return table;
}

std::vector<Rational> CoeffVector::to_dense() const {
  auto basis = monomial_basis(degree);
  int n = static_cast<int>(basis.size());
  std::vector<Rational> out(4 * n, Rational(0));
  for (const auto& [key, value] : entries) {
    auto it = std::find(basis.begin(), basis.end(), key.second);
    if (it == basis.end()) throw std::invalid_argument("coefficient index of wrong degree");
    int slot = key.first - 4;
    out[slot * n + static_cast<int>(it - basis.begin())] = value;
  }
  return out;
}

SymQForm gram_matrix(int l) {
  auto basis = monomial_basis(l);
  int n = static_cast<int>(basis.size());
  SymQForm q;
  q.basis.reserve(n);
  for (const auto& a : basis) q.basis.push_back({0, a});
  q.matrix = RatMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Rational value = dirichlet_pair(basis[i], basis[j]);
      q.matrix.at(i, j) = value;
      q.matrix.at(j, i) = value;
    }
  }
  return q;
}

RatMatrix cr_tensor(int axis, int l) {
  auto basis = monomial_basis(l);
  int n = static_cast<int>(basis.size());
  RatMatrix t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rational value = cr_pair(axis, basis[i], basis[j]);
      t.at(i, j) = value;
      t.at(j, i) = -value;
    }
  }
  return t;
}

SymQForm long_form(int l) {
  auto basis = monomial_basis(l);
  int n = static_cast<int>(basis.size());
  SymQForm q;
  q.basis.reserve(4 * n);
  for (int alpha = 4; alpha <= 7; ++alpha) {
    for (const auto& a : basis) q.basis.push_back({alpha, a});
  }
  q.matrix = RatMatrix(4 * n, 4 * n);

  SymQForm gram = gram_matrix(l);
  for (int slot = 0; slot < 4; ++slot) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        q.matrix.at(slot * n + i, slot * n + j) = gram.matrix.at(i, j);
      }
    }
  }

  // Coupling blocks: the bilinear form 4 * sign * A^alpha T^axis A^beta,
  // symmetrized, lands as -2 * sign * T^axis in the (alpha, beta) block and
  // its transpose in (beta, alpha).
  for (const auto& entry : calibration_table()) {
    RatMatrix t = cr_tensor(entry.axis, l);
    int ra = (entry.alpha - 4) * n;
    int rb = (entry.beta - 4) * n;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational value = t.at(i, j) * Rational(-2 * entry.sign);
        q.matrix.at(ra + i, rb + j) = value;
        q.matrix.at(rb + j, ra + i) = value;
      }
    }
  }
  return q;
}

SymQForm short_form(int axis, int l) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
  auto basis = monomial_basis(l);
  int n = static_cast<int>(basis.size());
  SymQForm q;
  q.basis.reserve(2 * n);
  for (int slot = 0; slot <= 1; ++slot) {
    for (const auto& a : basis) q.basis.push_back({slot, a});
  }
  q.matrix = RatMatrix(2 * n, 2 * n);

  SymQForm gram = gram_matrix(l);
  RatMatrix t = cr_tensor(axis, l);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      q.matrix.at(i, j) = gram.matrix.at(i, j);
      q.matrix.at(n + i, n + j) = gram.matrix.at(i, j);
      Rational value = t.at(i, j) * Rational(-2);
      q.matrix.at(i, n + j) = value;
      q.matrix.at(n + j, i) = value;
    }
  }
  return q;
}

std::vector<std::vector<int>> block_decompose(const SymQForm& q) {
  int n = q.dim();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    int id = static_cast<int>(blocks.size());
    std::vector<int> stack{start}, members;
    component[start] = id;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j == i || component[j] >= 0) continue;
        if (q.matrix.at(i, j) != 0) {
          component[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    blocks.push_back(std::move(members));
  }
  // Already ordered by smallest contained index because starts scan upward.
  return blocks;
}

Rational f_polynomial(const std::vector<Rational>& vars) {
  if (vars.size() != 10) throw std::invalid_argument("F takes exactly 10 variables");
  const Rational &a = vars[0], &b = vars[1], &c = vars[2], &x = vars[3], &y = vars[4],
                 &z = vars[5], &w = vars[6], &u = vars[7], &v = vars[8], &g = vars[9];
  Rational out = Rational(54) * (a * a + b * b + c * c) +
                 Rational(22) * (x * x + y * y + z * z + w * w + u * u + v * v) +
                 Rational(12) * g * g;
  out += Rational(36) * (a * b - a * c - b * c + y * b + a * z - x * c);
  out += Rational(36) * (-w * c - b * u);
  out += Rational(12) * (x * b + x * w - y * c - a * u + x * v);
  out += Rational(12) * (-y * u - z * c - b * v + w * u - c * u - c * v - b * w);
  out += Rational(12) * (-b * z - a * x - a * y);
  out += Rational(-8) * g * (u - v + w - x + y - z);
  out += Rational(4) * (y * w + x * z - x * u - y * v - z * u - w * v - x * y - w * z - u * v);
  return out;
}

RatMatrix f_hessian() {
  // Polarization: H[i][j] = F(e_i + e_j) - F(e_i) - F(e_j), exact for a
  // quadratic with F(0) = 0.
  RatMatrix h(10, 10);
  auto unit = [](int i) {
    std::vector<Rational> v(10, Rational(0));
    v[i] = 1;
    return v;
  };
  std::vector<Rational> fe(10);
  for (int i = 0; i < 10; ++i) fe[i] = f_polynomial(unit(i));
  for (int i = 0; i < 10; ++i) {
    for (int j = i; j < 10; ++j) {
      std::vector<Rational> v(10, Rational(0));
      v[i] += 1;
      v[j] += 1;
      Rational value = f_polynomial(v) - fe[i] - fe[j];
      h.at(i, j) = value;
      h.at(j, i) = value;
    }
  }
  return h;
}

const std::vector<BasisLabel>& f_variable_labels() {
  static const std::vector<BasisLabel> labels = {
      {4, MultiIndex(0, 0, 3)}, {5, MultiIndex(0, 3, 0)}, {6, MultiIndex(3, 0, 0)},
      {4, MultiIndex(2, 0, 1)}, {4, MultiIndex(0, 2, 1)}, {5, MultiIndex(0, 1, 2)},
      {5, MultiIndex(2, 1, 0)}, {6, MultiIndex(1, 2, 0)}, {6, MultiIndex(1, 0, 2)},
      {7, MultiIndex(1, 1, 1)},
  };
  return labels;
}

std::vector<Rational> f_paper_vector() {
  return {Rational(3), Rational(-4), Rational(-1), Rational(3),  Rational(4),
          Rational(-4), Rational(-3), Rational(-1), Rational(-2), Rational(1)};
}

std::vector<BlockDiscrepancy> f_block_discrepancies() {
  SymQForm q = long_form(3);
  const auto& labels = f_variable_labels();
  RatMatrix h = f_hessian();
  std::vector<int> idx;
  for (const auto& label : labels) idx.push_back(q.index_of(label));
  RatMatrix block = q.matrix.submatrix(idx);
  Rational s = Rational(2) * block.at(0, 0) / h.at(0, 0);

  std::vector<BlockDiscrepancy> out;
  for (int i = 0; i < 10; ++i) {
    for (int j = i; j < 10; ++j) {
      Rational published = s / 2 * h.at(i, j);
      if (block.at(i, j) == published) continue;
      BlockDiscrepancy d;
      d.f_row = i;
      d.f_col = j;
      d.row = labels[i];
      d.col = labels[j];
      d.assembled = block.at(i, j);
      d.published = published;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<Rational> embed_f_variables(const std::vector<Rational>& v10) {
  if (v10.size() != 10) throw std::invalid_argument("expected 10 variables");
  SymQForm q = long_form(3);
  std::vector<Rational> out(q.dim(), Rational(0));
  const auto& labels = f_variable_labels();
  for (int i = 0; i < 10; ++i) out[q.index_of(labels[i])] = v10[i];
  return out;
}

CoeffVector embed_functions(const Polynomial& f4, const Polynomial& f5, const Polynomial& f6,
                            const Polynomial& f7, int l) {
  CoeffVector out;
  out.degree = l;
  const Polynomial* fs[4] = {&f4, &f5, &f6, &f7};
  for (int slot = 0; slot < 4; ++slot) {
    const Polynomial& f = *fs[slot];
    for (const auto& [a, coeff] : f.terms()) {
      if (a.degree() != l) {
        throw std::invalid_argument("function is not homogeneous of the requested degree");
      }
      out.entries[{slot + 4, a}] = coeff;
    }
  }
  return out;
}

Rational long_gap_poly(const std::array<Polynomial, 4>& f) {
  Rational coupling(0);
  for (const auto& entry : calibration_table()) {
    coupling += Rational(4 * entry.sign) *
                cr_value(entry.axis, f[entry.alpha - 4], f[entry.beta - 4]);
  }
  Rational energy(0);
  for (const auto& fa : f) energy += dirichlet_value(fa, fa);
  return energy - coupling;
}

std::array<Polynomial, 4> counterexample_functions() {
  auto mono = [](int a1, int a2, int a3, long c) {
    return Polynomial::monomial(MultiIndex(a1, a2, a3), Rational(c));
  };
  Polynomial f4 = mono(0, 0, 3, 3) + mono(2, 0, 1, 4) + mono(0, 2, 1, 4);
  Polynomial f5 = mono(0, 3, 0, -4) + mono(0, 1, 2, -4) + mono(2, 1, 0, -3);
  Polynomial f6 = mono(3, 0, 0, -1) + mono(1, 2, 0, -1) + mono(1, 0, 2, -2);
  Polynomial f7 = mono(1, 1, 1, 1);
  return {f4, f5, f6, f7};
}

}  // namespace crsphere
