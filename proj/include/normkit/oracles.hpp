// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_ORACLES_HPP
#define NORMKIT_ORACLES_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "normkit/matrix.hpp"
#include "normkit/optimize.hpp"

namespace normkit {

namespace detail {

// One-sided Jacobi: rotate column pairs until mutually orthogonal; the
// largest column norm is then the largest singular value. Deliberately a
// different algorithm from the power-iteration path it cross-checks.
inline double jacobi_sigma_max_real(std::vector<std::vector<double>> g) {
  const std::size_t n = g.size();  // columns
  if (n == 0) return 0.0;
  const std::size_t m = g[0].size();
  if (m == 0) return 0.0;
  const double eps = 1e-15;
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double aii = 0.0, ajj = 0.0, aij = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
          aii += g[i][r] * g[i][r];
          ajj += g[j][r] * g[j][r];
          aij += g[i][r] * g[j][r];
        }
        if (std::abs(aij) <= eps * std::sqrt(aii * ajj)) continue;
        rotated = true;
        double tau = (ajj - aii) / (2.0 * aij);
        double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        for (std::size_t r = 0; r < m; ++r) {
          double gi = g[i][r];
          double gj = g[j][r];
          g[i][r] = c * gi - s * gj;
          g[j][r] = s * gi + c * gj;
        }
      }
    }
    if (!rotated) break;
  }
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += g[i][r] * g[i][r];
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

}  // namespace detail

/// Largest singular value by one-sided Jacobi. Complex input goes through
/// the real 2m x 2n embedding [[Re, -Im], [Im, Re]], which has the same
/// singular values (doubled in multiplicity). Test-grade oracle, shipped so
/// the CLI can emit certified reports.
inline double oracle_svd_sigma_max(const Matrix& a) {
  for (const auto& v : a.a)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("non-finite matrix entry");
  const bool real = a.is_real();
  const std::size_t m = real ? a.rows : 2 * a.rows;
  const std::size_t n = real ? a.cols : 2 * a.cols;
  // column-major copy; keep the smaller side as the column count
  auto fill = [&](std::size_t r, std::size_t c) -> double {
    if (real) return a(r, c).real();
    const std::size_t br = r % a.rows, bc = c % a.cols;
    const bool rlow = r < a.rows, clow = c < a.cols;
    if (rlow && clow) return a(br, bc).real();
    if (rlow && !clow) return -a(br, bc).imag();
    if (!rlow && clow) return a(br, bc).imag();
    return a(br, bc).real();
  };
  const bool flip = n > m;  // work on the transpose when wider than tall
  const std::size_t rows = flip ? n : m;
  const std::size_t cols = flip ? m : n;
  std::vector<std::vector<double>> g(cols, std::vector<double>(rows));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      g[j][i] = flip ? fill(j, i) : fill(i, j);
  return detail::jacobi_sigma_max_real(std::move(g));
}

struct GridExtremum {
  double value = 0.0;
  RealVec arg;
};

/// Exhaustive extremization of an objective over a box. `resolution` is the
/// subdivision count per axis (resolution+1 samples, endpoints included), so
/// doubling the resolution refines a nested grid and can only improve the
/// reported extremum. Dimension is capped at 4 as a cost guard.
inline GridExtremum oracle_grid_extremum(
    const std::function<double(const RealVec&)>& objective, const RealVec& lo,
    const RealVec& hi, std::size_t resolution, bool maximize = false) {
  const std::size_t d = lo.size();
  if (d == 0 || d != hi.size())
    throw std::invalid_argument("bad box bounds");
  if (d > 4) throw std::invalid_argument("grid oracle limited to dimension 4");
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");

  GridExtremum best;
  best.value = maximize ? -std::numeric_limits<double>::infinity()
                        : std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(d, 0);
  RealVec x(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i)
      x[i] = lo[i] + (hi[i] - lo[i]) * (static_cast<double>(idx[i]) /
                                        static_cast<double>(resolution));
    double v = objective(x);
    if (maximize ? v > best.value : v < best.value) {
      best.value = v;
      best.arg = x;
    }
    std::size_t k = 0;
    while (k < d && ++idx[k] > resolution) {
      idx[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  return best;
}

}  // namespace normkit

#endif
