// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_MATRIX_HPP
#define NORMKIT_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "normkit/vector.hpp"

namespace normkit {

// Dense row-major complex matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Complex& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix from_columns(const std::vector<Vec>& cols_in) {
    if (cols_in.empty()) throw std::invalid_argument("empty column set");
    Matrix m(cols_in[0].size(), cols_in.size());
    for (std::size_t j = 0; j < cols_in.size(); ++j) {
      if (cols_in[j].size() != m.rows)
        throw std::invalid_argument("ragged column set");
      for (std::size_t i = 0; i < m.rows; ++i) m(i, j) = cols_in[j][i];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows_in) {
    if (rows_in.empty()) throw std::invalid_argument("empty row set");
    Matrix m(rows_in.size(), rows_in[0].size());
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
      if (rows_in[i].size() != m.cols)
        throw std::invalid_argument("ragged row set");
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows_in[i][j];
    }
    return m;
  }

  Vec row(std::size_t i) const {
    Vec r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Vec column(std::size_t j) const {
    Vec c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix adjoint() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
  }

  bool is_real(double tol = 0.0) const {
    for (const auto& v : a)
      if (std::abs(v.imag()) > tol) return false;
    return true;
  }
};

inline Vec matvec(const Matrix& m, const Vec& x) {
  if (x.size() != m.cols) throw std::invalid_argument("matvec dim mismatch");
  Vec y(m.rows, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    Complex s(0.0, 0.0);
    const Complex* row = &m.a[i * m.cols];
    for (std::size_t j = 0; j < m.cols; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

inline Matrix matmul(const Matrix& l, const Matrix& r) {
  if (l.cols != r.rows) throw std::invalid_argument("matmul dim mismatch");
  Matrix m(l.rows, r.cols);
  for (std::size_t i = 0; i < l.rows; ++i)
    for (std::size_t k = 0; k < l.cols; ++k) {
      Complex v = l(i, k);
      if (v == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < r.cols; ++j) m(i, j) += v * r(k, j);
    }
  return m;
}

// LU factorization with partial pivoting, kept around for repeated solves
// (the basis-zero norm solves one system per evaluation).
class LuFactorization {
 public:
  explicit LuFactorization(const Matrix& m) : lu_(m), piv_(m.rows) {
    if (m.rows != m.cols) throw std::invalid_argument("LU needs a square matrix");
    const std::size_t n = m.rows;
    for (std::size_t i = 0; i < n; ++i) piv_[i] = i;
    double scale = 0.0;
    for (const auto& v : m.a) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        double cand = std::abs(lu_(i, k));
        if (cand > best) {
          best = cand;
          p = i;
        }
      }
      if (best <= scale * 1e-13) {
        singular_ = true;
        return;
      }
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        std::swap(piv_[k], piv_[p]);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        Complex f = lu_(i, k) / lu_(k, k);
        lu_(i, k) = f;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  bool singular() const { return singular_; }

  Vec solve(const Vec& b) const {
    if (singular_) throw std::runtime_error("singular matrix in solve");
    const std::size_t n = lu_.rows;
    if (b.size() != n) throw std::invalid_argument("solve dim mismatch");
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[piv_[i]];
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

 private:
  Matrix lu_;
  std::vector<std::size_t> piv_;
  bool singular_ = false;
};

// Numerical rank by row-echelon elimination with partial pivoting.
inline std::size_t rank(Matrix m, double rel_tol = 1e-10) {
  double scale = 0.0;
  for (const auto& v : m.a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0;
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
    std::size_t p = r;
    double best = std::abs(m(r, j));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      double cand = std::abs(m(i, j));
      if (cand > best) {
        best = cand;
        p = i;
      }
    }
    if (best <= scale * rel_tol) continue;
    if (p != r)
      for (std::size_t jj = 0; jj < m.cols; ++jj) std::swap(m(r, jj), m(p, jj));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      Complex f = m(i, j) / m(r, j);
      for (std::size_t jj = j; jj < m.cols; ++jj) m(i, jj) -= f * m(r, jj);
    }
    ++r;
  }
  return r;
}

// Least-squares solve via the normal equations; fine at desk scale.
inline Vec least_squares(const Matrix& m, const Vec& b) {
  Matrix ah = m.adjoint();
  Matrix normal = matmul(ah, m);
  Vec rhs = matvec(ah, b);
  LuFactorization lu(normal);
  if (lu.singular()) throw std::runtime_error("rank-deficient least squares");
  return lu.solve(rhs);
}

}  // namespace normkit

#endif
