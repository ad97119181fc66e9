// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_BILINEAR_HPP
#define NORMKIT_BILINEAR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "normkit/matrix.hpp"
#include "normkit/norms.hpp"
#include "normkit/operators.hpp"

namespace normkit {

/// Bilinear form phi(x, y) = sum_ij c_ij x_i y_j on K^m x K^n (linear in
/// each slot, no conjugation), with the norms the sup runs over.
struct BilinearForm {
  Matrix coeffs;        // c_ij = phi(e_i, e_j)
  NormSpec left_norm;   // dim == coeffs.rows
  NormSpec right_norm;  // dim == coeffs.cols

  BilinearForm(Matrix c, NormSpec l, NormSpec r)
      : coeffs(std::move(c)), left_norm(std::move(l)), right_norm(std::move(r)) {
    if (coeffs.rows != left_norm.dim() || coeffs.cols != right_norm.dim())
      throw std::invalid_argument("form/norm dimension mismatch");
  }

  Complex operator()(const Vec& x, const Vec& y) const {
    return pairing(x, matvec(coeffs, y));
  }
};

/// sup{|<v, x>| : ||x|| <= 1} together with a maximizer. Closed form for
/// p-norms; derivative-free ascent over complex arguments otherwise.
inline std::pair<double, Vec> dual_vector_norm(const Vec& v,
                                               const NormSpec& norm,
                                               std::uint64_t seed = 0) {
  if (v.size() != norm.dim())
    throw std::invalid_argument("vector/norm dimension mismatch");
  if (norm.kind() == NormSpec::Kind::P)
    return detail::holder_equality_witness(v, norm.exponent());

  auto objective = [&](const RealVec& r) -> double {
    Vec x = detail::unpack(r);
    double nx = norm(x);
    if (!(nx > 0.0)) return 0.0;
    return -std::abs(pairing(v, x)) / nx;
  };
  const std::size_t n = v.size();
  std::vector<RealVec> starts;
  for (std::size_t j = 0; j < n; ++j)
    starts.push_back(detail::pack(unit_vector(n, j)));
  if (norm2(v) > 0.0)
    starts.push_back(detail::pack(scale(Complex(1.0 / norm2(v), 0.0), v)));
  MinimizeOptions opt;
  opt.tol = 1e-12;
  opt.random_starts = 8;
  opt.seed = seed ^ 0x6a09e667u;
  opt.pattern.initial_step = 0.5;
  opt.pattern.min_step = 1e-12;
  auto res = minimize_convex(objective, 2 * n, starts, opt);
  Vec x = detail::normalize_into_ball(detail::unpack(res.arg), norm);
  return {std::abs(pairing(v, x)), x};
}

/// NormSpec for the dual norm: conjugate exponent for p-norms, a capturing
/// evaluator backed by dual_vector_norm otherwise. Marked as dual of the
/// primal either way, which is what uncurry keys on.
inline NormSpec dual_norm_spec(const NormSpec& norm, std::uint64_t seed = 0) {
  if (norm.kind() == NormSpec::Kind::P) return norm.dual();
  NormSpec primal = norm;
  NormSpec d = NormSpec::custom(
      "dual(" + (norm.name().empty() ? std::string("norm") : norm.name()) + ")",
      norm.dim(),
      [primal, seed](const Vec& v) {
        return dual_vector_norm(v, primal, seed).first;
      });
  d.mark_dual_of(norm);
  return d;
}

struct BilinearNormResult {
  double value = 0.0;
  Vec witness_x;
  Vec witness_y;
  double certified_lower = 0.0;
  std::string method = "alternating";
  std::size_t cert_samples = 0;
  std::size_t cert_violations = 0;  // |phi(x,y)| > value ||x|| ||y|| (1+tol)
};

/// sup |phi(x, y)| over the product of unit balls by alternating
/// maximization: freezing one slot leaves a dual-norm subproblem in the
/// other. Multistart, then a fresh-sample pass re-checks the continuity
/// bound |phi(x,y)| <= ||phi|| ||x|| ||y||.
inline BilinearNormResult bilinear_norm(const BilinearForm& phi, double tol,
                                        std::uint64_t seed = 0) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const Matrix ct = phi.coeffs.transpose();
  BilinearNormResult res;

  Rng rng(seed ^ 0xbb67ae85u);
  std::vector<Vec> y_starts;
  for (std::size_t j = 0; j < phi.coeffs.cols; ++j)
    y_starts.push_back(unit_vector(phi.coeffs.cols, j));
  for (int s = 0; s < 8; ++s)
    y_starts.push_back(
        sample_unit_vector(phi.right_norm, SampleMode::OnSphere, rng));

  for (const auto& y0 : y_starts) {
    Vec y = y0;
    double value = 0.0;
    Vec x;
    for (int it = 0; it < 100; ++it) {
      auto [vx, xs] = dual_vector_norm(matvec(phi.coeffs, y), phi.left_norm, seed);
      x = xs;
      auto [vy, ys] = dual_vector_norm(matvec(ct, x), phi.right_norm, seed);
      y = ys;
      if (vy <= value * (1.0 + tol) + 1e-300) {
        value = std::max(value, vy);
        break;
      }
      value = vy;
      (void)vx;
    }
    if (value > res.value) {
      res.value = value;
      res.witness_x = x;
      res.witness_y = y;
    }
  }
  if (res.witness_x.empty()) {
    res.witness_x = unit_vector(phi.coeffs.rows, 0);
    res.witness_y = unit_vector(phi.coeffs.cols, 0);
  }
  res.witness_x = detail::normalize_into_ball(res.witness_x, phi.left_norm);
  res.witness_y = detail::normalize_into_ball(res.witness_y, phi.right_norm);
  res.certified_lower = std::abs(phi(res.witness_x, res.witness_y));
  res.value = std::max(res.value, res.certified_lower);

  res.cert_samples = 512;
  for (std::size_t s = 0; s < res.cert_samples; ++s) {
    Vec x = rng.gaussian_vector(phi.coeffs.rows, true);
    Vec y = rng.gaussian_vector(phi.coeffs.cols, true);
    double lhs = std::abs(phi(x, y));
    double rhs = res.value * phi.left_norm(x) * phi.right_norm(y);
    if (lhs > rhs * (1.0 + tol) + 1e-300) ++res.cert_violations;
  }
  return res;
}

/// Elementary tensor [xp (x) yp](x, y) = <xp, x><yp, y>, i.e. the outer
/// product coefficient matrix. Its norm factors as the product of the two
/// dual norms.
inline BilinearForm elementary_tensor_form(const Vec& xp, const Vec& yp,
                                           NormSpec left_norm,
                                           NormSpec right_norm) {
  if (xp.size() != left_norm.dim() || yp.size() != right_norm.dim())
    throw std::invalid_argument("tensor factor dimension mismatch");
  Matrix c(xp.size(), yp.size());
  for (std::size_t i = 0; i < xp.size(); ++i)
    for (std::size_t j = 0; j < yp.size(); ++j) c(i, j) = xp[i] * yp[j];
  return BilinearForm(std::move(c), std::move(left_norm),
                      std::move(right_norm));
}

/// Curry: phi -> L_phi with <L_phi x, y> = phi(x, y). The operator carries
/// x to the coefficient vector of phi(x, .), its target being the dual norm
/// of the right factor; ||L_phi|| = ||phi||.
inline LinearOperator curry(const BilinearForm& phi, std::uint64_t seed = 0) {
  return LinearOperator(phi.coeffs.transpose(), phi.left_norm,
                        dual_norm_spec(phi.right_norm, seed));
}

/// Uncurry: T -> beta_T(x, y) = <T x, y>; inverse of curry. Requires the
/// operator's target norm to be marked as a dual so the right factor's
/// primal norm can be recovered.
inline BilinearForm uncurry(const LinearOperator& op) {
  if (!op.target.marked_dual())
    throw std::logic_error("uncurry needs a dual-marked target norm");
  return BilinearForm(op.matrix.transpose(), op.source,
                      op.target.dual_primal());
}

}  // namespace normkit

#endif
