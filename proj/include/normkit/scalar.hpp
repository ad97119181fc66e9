// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_SCALAR_HPP
#define NORMKIT_SCALAR_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace normkit {

using Complex = std::complex<double>;

// Principal argument mapped into [0, 2*pi).
inline double principal_arg(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

// Unit phase e^{i*arg(z)}; returns 1 for z = 0.
inline Complex phase(Complex z) {
  double m = std::abs(z);
  if (m == 0.0) return Complex(1.0, 0.0);
  return z / m;
}

inline bool is_real(Complex z, double tol = 0.0) {
  return std::abs(z.imag()) <= tol;
}

// Real-mode gate: rejects scalars with a nonzero imaginary part.
inline double require_real(Complex z, const char* what = "scalar") {
  if (z.imag() != 0.0)
    throw std::invalid_argument(std::string(what) +
                                ": complex value where a real one is required");
  return z.real();
}

}  // namespace normkit

#endif
