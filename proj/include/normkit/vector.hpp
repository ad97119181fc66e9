// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_VECTOR_HPP
#define NORMKIT_VECTOR_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "normkit/scalar.hpp"

namespace normkit {

using Vec = std::vector<Complex>;

inline Vec zeros(std::size_t n) { return Vec(n, Complex(0.0, 0.0)); }

inline Vec unit_vector(std::size_t n, std::size_t k) {
  Vec e = zeros(n);
  e.at(k) = Complex(1.0, 0.0);
  return e;
}

inline Vec real_vector(const std::vector<double>& r) {
  Vec v(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) v[i] = Complex(r[i], 0.0);
  return v;
}

inline void check_same_dim(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("vector dimension mismatch");
}

inline Vec add(const Vec& x, const Vec& y) {
  check_same_dim(x, y);
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

inline Vec sub(const Vec& x, const Vec& y) {
  check_same_dim(x, y);
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

inline Vec scale(Complex a, const Vec& x) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = a * x[i];
  return z;
}

inline Vec axpy(Complex a, const Vec& x, const Vec& y) {
  check_same_dim(x, y);
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = a * x[i] + y[i];
  return z;
}

// Bilinear pairing sum_i x_i*y_i (no conjugation).
inline Complex pairing(const Vec& x, const Vec& y) {
  check_same_dim(x, y);
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Hermitian inner product sum_i conj(x_i)*y_i.
inline Complex inner(const Vec& x, const Vec& y) {
  check_same_dim(x, y);
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

inline double norm2(const Vec& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

inline bool is_real(const Vec& x, double tol = 0.0) {
  for (const auto& v : x)
    if (!is_real(v, tol)) return false;
  return true;
}

inline std::vector<double> real_part(const Vec& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i].real();
  return r;
}

inline void require_real(const Vec& x, const char* what = "vector") {
  for (const auto& v : x) require_real(v, what);
}

}  // namespace normkit

#endif
