// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_EQUIVALENCE_HPP
#define NORMKIT_EQUIVALENCE_HPP

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "normkit/norms.hpp"
#include "normkit/optimize.hpp"
#include "normkit/sampling.hpp"

namespace normkit {

/// Max modulus of the coordinates of x in the given basis. Throws on a
/// singular basis.
inline double basis_zero_norm(const std::vector<Vec>& basis, const Vec& x) {
  return NormSpec::zero_norm(basis)(x);
}

struct EquivalenceConstants {
  double a = 0.0;  // lower constant: a * ||x||_0 <= ||x||
  double b = 0.0;  // upper constant: ||x|| <= b * ||x||_0 (sum of basis norms)
  std::vector<Vec> basis;
  Vec a_witness;   // ambient vector with ||witness||_0 = 1, ||witness|| ~ a
  std::string method_a;  // "grid" or "convex-descent"
  bool complex_mode = true;
};

namespace detail {

struct FaceProblem {
  const std::vector<Vec>* basis;
  const NormSpec* norm;
  std::size_t fixed;   // coordinate pinned to the face
  Complex fixed_value; // +-1 (real mode) or e^{i theta}
  bool complex_mode;

  std::size_t free_dims() const {
    return (basis->size() - 1) * (complex_mode ? 2 : 1);
  }

  // Free coordinates are clamped into the unit disc (interval in real mode),
  // so the search may roam and still evaluate a feasible point.
  Vec assemble(const RealVec& free_coords) const {
    const std::size_t n = basis->size();
    Vec alpha(n);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == fixed) {
        alpha[i] = fixed_value;
        continue;
      }
      Complex a;
      if (complex_mode) {
        a = Complex(free_coords[t], free_coords[t + 1]);
        t += 2;
      } else {
        a = Complex(free_coords[t], 0.0);
        t += 1;
      }
      double m = std::abs(a);
      if (m > 1.0) a /= m;
      alpha[i] = a;
    }
    Vec x = zeros((*basis)[0].size());
    for (std::size_t i = 0; i < n; ++i) x = axpy(alpha[i], (*basis)[i], x);
    return x;
  }

  double operator()(const RealVec& free_coords) const {
    return (*norm)(assemble(free_coords));
  }
};

}  // namespace detail

/// Equivalence constants a, b with a ||x||_0 <= ||x|| <= b ||x||_0.
/// b is the closed-form sum of basis-vector norms; a is the minimum of the
/// norm over the ||.||_0 unit sphere, found face by face (each face pins one
/// coordinate; complex mode discretizes its phase into `phase_angles`).
inline EquivalenceConstants equivalence_constants(
    const std::vector<Vec>& basis, const NormSpec& norm, double tol,
    bool complex_mode = true, std::uint64_t seed = 0,
    std::size_t phase_angles = 32) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  NormSpec zero = NormSpec::zero_norm(basis);  // throws if basis is singular
  const std::size_t n = basis.size();

  EquivalenceConstants out;
  out.basis = basis;
  out.complex_mode = complex_mode;
  for (const auto& bi : basis) {
    double nb = norm(bi);
    if (!(nb > 0.0))
      throw invalid_norm_error("norm degenerate on a basis vector");
    out.b += nb;
  }

  std::vector<Complex> face_values;
  if (complex_mode) {
    for (std::size_t k = 0; k < phase_angles; ++k) {
      double th = 2.0 * std::numbers::pi * static_cast<double>(k) /
                  static_cast<double>(phase_angles);
      face_values.emplace_back(std::cos(th), std::sin(th));
    }
  } else {
    face_values = {Complex(1.0, 0.0), Complex(-1.0, 0.0)};
  }

  double best = std::numeric_limits<double>::infinity();
  Vec best_x;
  std::string method = "convex-descent";

  for (std::size_t fixed = 0; fixed < n; ++fixed) {
    for (const Complex& fv : face_values) {
      detail::FaceProblem face{&basis, &norm, fixed, fv, complex_mode};
      const std::size_t fd = face.free_dims();
      if (fd == 0) {
        Vec x = face.assemble({});
        double v = norm(x);
        if (v < best) {
          best = v;
          best_x = x;
        }
        continue;
      }

      std::vector<RealVec> starts = {RealVec(fd, 0.0)};
      double grid_value = std::numeric_limits<double>::infinity();
      if (!complex_mode && fd <= 3) {
        // coarse grid seed; descent then refines it
        const std::size_t res = 16;
        std::vector<std::size_t> idx(fd, 0);
        RealVec pt(fd);
        while (true) {
          for (std::size_t i = 0; i < fd; ++i)
            pt[i] = -1.0 + 2.0 * static_cast<double>(idx[i]) /
                               static_cast<double>(res);
          double v = face(pt);
          if (v < grid_value) {
            grid_value = v;
            starts[0] = pt;
          }
          std::size_t c = 0;
          while (c < fd && ++idx[c] > res) {
            idx[c] = 0;
            ++c;
          }
          if (c == fd) break;
        }
      }

      MinimizeOptions opt;
      opt.tol = tol * 1e-2;
      opt.seed = seed ^ (fixed * 1315423911u);
      opt.random_starts = complex_mode ? 4 : 2;
      opt.pattern.initial_step = 0.5;
      opt.pattern.min_step = std::min(1e-12, tol * 1e-4);
      auto res = minimize_convex([&face](const RealVec& c) { return face(c); },
                                 fd, starts, opt);
      if (res.value < best) {
        best = res.value;
        best_x = face.assemble(res.arg);
        method = (grid_value - res.value <= tol) ? "grid" : "convex-descent";
      }
    }
  }

  out.a = best;
  out.a_witness = best_x;
  out.method_a = method;
  if (!(out.a > 0.0))
    throw invalid_norm_error("norm degenerate on the ||.||_0 unit sphere");
  return out;
}

struct SandwichCheck {
  std::size_t samples = 0;
  std::size_t lower_violations = 0;
  std::size_t upper_violations = 0;
  double worst_lower_slack = 0.0;  // max(a*||x||_0 - ||x||), should stay <= 0
  double worst_upper_slack = 0.0;  // max(||x|| - b*||x||_0)
  bool pass = true;
};

/// Samples the sandwich a ||x||_0 <= ||x|| <= b ||x||_0 with 1e-9 relative
/// slack on seeded Gaussian vectors.
inline SandwichCheck check_equivalence_sandwich(const EquivalenceConstants& eq,
                                                const NormSpec& norm,
                                                std::size_t samples,
                                                std::uint64_t seed) {
  NormSpec zero = NormSpec::zero_norm(eq.basis);
  SandwichCheck chk;
  chk.samples = samples;
  Rng rng(seed);
  const double slack = 1e-9;
  for (std::size_t s = 0; s < samples; ++s) {
    Vec x = rng.gaussian_vector(norm.dim(), eq.complex_mode);
    double nx = norm(x);
    double n0 = zero(x);
    double lo = eq.a * n0 - nx;
    double hi = nx - eq.b * n0;
    chk.worst_lower_slack = std::max(chk.worst_lower_slack, lo);
    chk.worst_upper_slack = std::max(chk.worst_upper_slack, hi);
    if (lo > slack * std::max(1.0, nx)) ++chk.lower_violations;
    if (hi > slack * std::max(1.0, nx)) ++chk.upper_violations;
  }
  chk.pass = chk.lower_violations == 0 && chk.upper_violations == 0;
  return chk;
}

}  // namespace normkit

#endif
