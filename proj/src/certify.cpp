// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace crsphere {

std::string Inertia::to_string() const {
  return "(" + std::to_string(n_pos) + "," + std::to_string(n_neg) + "," + std::to_string(n_zero) +
         ")";
}

namespace {

bool abs_less(const Rational& a, const Rational& b) { return abs(a) < abs(b); }

}  // namespace

Inertia inertia(const RatMatrix& q, CongruenceRecord* record) {
  if (!q.is_symmetric()) throw std::invalid_argument("inertia needs a symmetric matrix");
  const int n = q.rows();
  RatMatrix a = q;
  RatMatrix c = RatMatrix::identity(n);
  std::vector<bool> done(n, false);
  std::vector<Rational> diagonal(n, Rational(0));
  std::vector<int> pivots;
  Inertia result;

  int remaining = n;
  while (remaining > 0) {
    // Largest |diagonal| pivot among the active block, ties to the smallest
    // index. Exact comparisons throughout; a pivot is "zero" only if it is.
    int p = -1;
    for (int i = 0; i < n; ++i) {
      if (done[i] || a.at(i, i) == 0) continue;
      if (p < 0 || abs_less(a.at(p, p), a.at(i, i))) p = i;
    }

    if (p >= 0) {
      Rational d = a.at(p, p);
      std::vector<Rational> row(n, Rational(0));
      for (int j = 0; j < n; ++j) {
        if (!done[j] && j != p) row[j] = a.at(p, j) / d;
      }
      for (int i = 0; i < n; ++i) {
        if (done[i] || i == p || a.at(i, p) == 0) continue;
        const Rational aip = a.at(i, p);
        for (int j = 0; j < n; ++j) {
          if (done[j] || j == p || row[j] == 0) continue;
          a.at(i, j) -= aip * row[j];
        }
      }
      for (int j = 0; j < n; ++j) {
        if (j == p) continue;
        a.at(p, j) = 0;
        a.at(j, p) = 0;
      }
      if (record) {
        // Column operation C_j <- C_j - (a_pj / d) C_p.
        for (int j = 0; j < n; ++j) {
          if (row[j] == 0) continue;
          for (int i = 0; i < n; ++i) c.at(i, j) -= row[j] * c.at(i, p);
        }
      }
      diagonal[p] = d;
      pivots.push_back(p);
      done[p] = true;
      --remaining;
      if (d > 0) {
        ++result.n_pos;
      } else {
        ++result.n_neg;
      }
      continue;
    }

    // Active diagonal is identically zero. Take the first nonzero
    // off-diagonal entry; the 2x2 block [[0,e],[e,0]] contributes (+1,-1).
    int bp = -1, bq = -1;
    for (int i = 0; i < n && bp < 0; ++i) {
      if (done[i]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (done[j]) continue;
        if (a.at(i, j) != 0) {
          bp = i;
          bq = j;
          break;
        }
      }
    }
    if (bp < 0) {
      // Whole active block is zero.
      result.n_zero += remaining;
      break;
    }

    Rational e = a.at(bp, bq);
    std::vector<Rational> rowp(n, Rational(0)), rowq(n, Rational(0));
    for (int j = 0; j < n; ++j) {
      if (done[j] || j == bp || j == bq) continue;
      rowp[j] = a.at(bp, j) / e;
      rowq[j] = a.at(bq, j) / e;
    }
    for (int i = 0; i < n; ++i) {
      if (done[i] || i == bp || i == bq) continue;
      const Rational aip = a.at(i, bp), aiq = a.at(i, bq);
      if (aip == 0 && aiq == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (done[j] || j == bp || j == bq) continue;
        // Block elimination through [[0,e],[e,0]]^{-1}.
        a.at(i, j) -= aip * rowq[j] + aiq * rowp[j];
      }
    }
    for (int j = 0; j < n; ++j) {
      if (j != bp && j != bq) {
        a.at(bp, j) = a.at(j, bp) = 0;
        a.at(bq, j) = a.at(j, bq) = 0;
      }
    }
    if (record) {
      for (int j = 0; j < n; ++j) {
        if (done[j] || j == bp || j == bq) continue;
        if (rowq[j] != 0 || rowp[j] != 0) {
          for (int i = 0; i < n; ++i) {
            c.at(i, j) -= rowq[j] * c.at(i, bp) + rowp[j] * c.at(i, bq);
          }
        }
      }
      // Split the hyperbolic pair: (u, v) = (p + q, p - q) diagonalizes it.
      for (int i = 0; i < n; ++i) {
        Rational cp = c.at(i, bp), cq = c.at(i, bq);
        c.at(i, bp) = cp + cq;
        c.at(i, bq) = cp - cq;
      }
    }
    diagonal[bp] = 2 * e;
    diagonal[bq] = -2 * e;
    pivots.push_back(bp);
    pivots.push_back(bq);
    done[bp] = done[bq] = true;
    remaining -= 2;
    ++result.n_pos;
    ++result.n_neg;
  }

  if (record) {
    record->transform = std::move(c);
    record->diagonal = std::move(diagonal);
    record->pivot_sequence = std::move(pivots);
  }
  return result;
}

Inertia inertia(const SymQForm& q, CongruenceRecord* record) { return inertia(q.matrix, record); }

JacobiResult jacobi_spectrum(const RatMatrix& q, double tol) {
  if (!q.is_symmetric()) throw std::invalid_argument("jacobi_spectrum needs a symmetric matrix");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const int n = q.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i][i] = 1.0;
    for (int j = 0; j < n; ++j) {
      a[i][j] = q.at(i, j).get_d();
      norm += a[i][j] * a[i][j];
    }
  }
  norm = std::sqrt(norm);

  const int kMaxSweeps = 100;
  int sweep = 0;
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
    }
    return std::sqrt(s);
  };

  if (norm > 0.0) {
    while (off_norm() >= tol * norm) {
      if (++sweep > kMaxSweeps) {
        throw std::runtime_error("Jacobi eigensolver failed to converge within the sweep budget");
      }
      for (int p = 0; p < n - 1; ++p) {
        for (int qq = p + 1; qq < n; ++qq) {
          double apq = a[p][qq];
          if (apq == 0.0) continue;
          double theta = (a[qq][qq] - a[p][p]) / (2.0 * apq);
          double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          double cs = 1.0 / std::sqrt(t * t + 1.0);
          double sn = t * cs;
          for (int k = 0; k < n; ++k) {
            double akp = a[k][p], akq = a[k][qq];
            a[k][p] = cs * akp - sn * akq;
            a[k][qq] = sn * akp + cs * akq;
          }
          for (int k = 0; k < n; ++k) {
            double apk = a[p][k], aqk = a[qq][k];
            a[p][k] = cs * apk - sn * aqk;
            a[qq][k] = sn * apk + cs * aqk;
          }
          for (int k = 0; k < n; ++k) {
            double vkp = v[k][p], vkq = v[k][qq];
            v[k][p] = cs * vkp - sn * vkq;
            v[k][qq] = sn * vkp + cs * vkq;
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] > a[y][y]; });

  JacobiResult result;
  result.sweeps = sweep;
  result.eigenvalues.reserve(n);
  result.eigenvectors.reserve(n);
  for (int k : order) {
    result.eigenvalues.push_back(a[k][k]);
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = v[i][k];
    // Deterministic sign: largest-magnitude component positive.
    int arg = 0;
    for (int i = 1; i < n; ++i) {
      if (std::abs(col[i]) > std::abs(col[arg])) arg = i;
    }
    if (col[arg] < 0) {
      for (double& x : col) x = -x;
    }
    result.eigenvectors.push_back(std::move(col));
  }
  return result;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& q) {
  const int n = q.rows();
  const int m = q.cols();
  RatMatrix a = q;

  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i) {
      if (a.at(i, col) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    for (int j = 0; j < m; ++j) std::swap(a.at(row, j), a.at(pr, j));
    Rational d = a.at(row, col);
    for (int j = 0; j < m; ++j) a.at(row, j) /= d;
    for (int i = 0; i < n; ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      Rational f = a.at(i, col);
      for (int j = 0; j < m; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(m, false);
  for (int col : pivot_col_of_row) is_pivot[col] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> vec(m, Rational(0));
    vec[free] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      vec[pivot_col_of_row[r]] = -a.at(static_cast<int>(r), free);
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

namespace {

Rational quad_integer(const RatMatrix& q, const std::vector<Integer>& v) {
  std::vector<Rational> rv(v.size());
  for (size_t i = 0; i < v.size(); ++i) rv[i] = Rational(v[i]);
  return q.quad(rv);
}

bool all_zero(const std::vector<Integer>& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

Certificate instability_certificate(const RatMatrix& q, int max_scale) {
  CongruenceRecord record;
  Inertia sig = inertia(q, &record);
  Certificate cert;

  if (sig.n_neg == 0) {
    cert.kind = Certificate::Kind::kStable;
    cert.record = std::move(record);
    cert.kernel = kernel_basis(q);
    return cert;
  }

  cert.kind = Certificate::Kind::kUnstable;
  JacobiResult jac = jacobi_spectrum(q);
  const std::vector<double>& dir = jac.eigenvectors.back();
  const int n = q.rows();

  std::vector<Integer> last(n, Integer(0));
  for (int k = 1; k <= max_scale; ++k) {
    std::vector<Integer> v(n);
    for (int i = 0; i < n; ++i) v[i] = Integer(static_cast<long>(std::llround(k * dir[i])));
    if (all_zero(v)) continue;
    Rational value = quad_integer(q, v);
    if (value < 0) {
      cert.witness = std::move(v);
      cert.witness_value = std::move(value);
      cert.scale_used = k;
      return cert;
    }
    last = std::move(v);
  }

  // Rounding never came out negative (it essentially always does); walk the
  // +-1 lattice neighborhood of the last rounding, singles then pairs.
  long budget = 20000;
  auto try_vec = [&](std::vector<Integer> v) -> bool {
    if (all_zero(v) || budget-- <= 0) return false;
    Rational value = quad_integer(q, v);
    if (value < 0) {
      cert.witness = std::move(v);
      cert.witness_value = std::move(value);
      cert.scale_used = max_scale;
      return true;
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    for (int di : {-1, 1}) {
      auto v = last;
      v[i] += di;
      if (try_vec(std::move(v))) return cert;
    }
  }
  for (int i = 0; i < n && budget > 0; ++i) {
    for (int j = i + 1; j < n && budget > 0; ++j) {
      for (int di : {-1, 1}) {
        for (int dj : {-1, 1}) {
          auto v = last;
          v[i] += di;
          v[j] += dj;
          if (try_vec(std::move(v))) return cert;
        }
      }
    }
  }
  throw std::runtime_error(
      "inertia certifies a negative direction but the integer witness search budget is exhausted; "
      "raise max_scale");
}

bool verify_certificate(const RatMatrix& q, const Certificate& cert) {
  if (cert.kind == Certificate::Kind::kUnstable) {
    if (cert.witness.size() != static_cast<size_t>(q.rows())) return false;
    Rational value = quad_integer(q, cert.witness);
    return value == cert.witness_value && value < 0;
  }
  // Stable: re-multiply the congruence, check the diagonal is nonnegative
  // and that every kernel vector annihilates q.
  const RatMatrix& c = cert.record.transform;
  if (c.rows() != q.rows() || c.cols() != q.cols()) return false;
  RatMatrix d = c.transpose() * q * c;
  int zeros = 0;
  for (int i = 0; i < d.rows(); ++i) {
    for (int j = 0; j < d.cols(); ++j) {
      if (i == j) continue;
      if (d.at(i, j) != 0) return false;
    }
    if (d.at(i, i) != cert.record.diagonal[i]) return false;
    if (d.at(i, i) < 0) return false;
    if (d.at(i, i) == 0) ++zeros;
  }
  if (static_cast<int>(cert.kernel.size()) != zeros) return false;
  for (const auto& vec : cert.kernel) {
    for (const auto& entry : q.apply(vec)) {
      if (entry != 0) return false;
    }
  }
  return true;
}

}  // namespace crsphere
