// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_OPERATORS_HPP
#define NORMKIT_OPERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normkit/matrix.hpp"
#include "normkit/norms.hpp"
#include "normkit/optimize.hpp"
#include "normkit/sampling.hpp"

namespace normkit {

/// Dense linear operator between two finite-dimensional normed spaces.
struct LinearOperator {
  Matrix matrix;
  NormSpec source;  // dim == matrix.cols
  NormSpec target;  // dim == matrix.rows

  LinearOperator(Matrix m, NormSpec src, NormSpec tgt)
      : matrix(std::move(m)), source(std::move(src)), target(std::move(tgt)) {
    if (matrix.cols != source.dim() || matrix.rows != target.dim())
      throw std::invalid_argument("operator/norm dimension mismatch");
  }

  Vec apply(const Vec& x) const { return matvec(matrix, x); }
};

enum class OpNormMethod { ClosedForm, PowerIteration, MultistartAscent, Sampling };

inline const char* to_string(OpNormMethod m) {
  switch (m) {
    case OpNormMethod::ClosedForm: return "closed-form";
    case OpNormMethod::PowerIteration: return "power-iteration";
    case OpNormMethod::MultistartAscent: return "multistart-ascent";
    case OpNormMethod::Sampling: return "sampling";
  }
  return "?";
}

struct OperatorNormResult {
  double value = 0.0;
  OpNormMethod method = OpNormMethod::ClosedForm;
  Vec witness;                  // unit source vector, ||T w|| ~ value
  double certified_lower = 0.0; // ||T w|| re-evaluated on the witness
  std::optional<double> upper_bound;
  double sup_ball = 0.0;    // sup over ||x|| <= 1
  double sup_sphere = 0.0;  // sup over ||x|| == 1
  double sup_open = 0.0;    // sup over ||x|| < 1, via (1 - tol) scaling
  bool certified = false;   // closed form or converged power iteration
  bool power_iteration_converged = true;
};

namespace detail {

// Scales x onto the unit sphere of `norm`, then nudges it down so the
// evaluated norm never exceeds 1 (the certificates demand membership in the
// closed ball).
inline Vec normalize_into_ball(Vec x, const NormSpec& norm) {
  double n = norm(x);
  if (n == 0.0) return x;
  x = scale(Complex(1.0 / n, 0.0), x);
  for (int i = 0; i < 8 && norm(x) > 1.0; ++i)
    x = scale(Complex(1.0 - 4e-16, 0.0), x);
  return x;
}

// Unit-p-norm vector x maximizing |sum_j a_j x_j|; the maximum equals the
// conjugate-exponent norm of a (Hoelder equality with opposed phases).
inline std::pair<double, Vec> holder_equality_witness(const Vec& a, double p) {
  const std::size_t n = a.size();
  Vec x = zeros(n);
  if (p == 1.0) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (std::abs(a[j]) > std::abs(a[best])) best = j;
    x[best] = std::conj(phase(a[best]));
    double value = std::abs(a[best]);
    return {value, x};
  }
  if (p == kInfExponent) {
    double value = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = std::conj(phase(a[j]));
      value += std::abs(a[j]);
    }
    return {value, x};
  }
  const double q = p / (p - 1.0);
  double aq = NormSpec::p_norm(q, n)(a);
  if (aq == 0.0) {
    x[0] = 1.0;
    return {0.0, x};
  }
  for (std::size_t j = 0; j < n; ++j)
    x[j] = std::conj(phase(a[j])) * std::pow(std::abs(a[j]) / aq, q - 1.0);
  return {aq, x};
}

// Packs a complex vector into 2n reals for the derivative-free optimizer.
inline RealVec pack(const Vec& x) {
  RealVec r(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r[2 * i] = x[i].real();
    r[2 * i + 1] = x[i].imag();
  }
  return r;
}

inline Vec unpack(const RealVec& r) {
  Vec x(r.size() / 2);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = Complex(r[2 * i], r[2 * i + 1]);
  return x;
}

struct AscentResult {
  double value = 0.0;
  Vec witness;
};

// Projected ascent of ||T x|| over the source unit sphere, run as descent on
// the scale-invariant ratio -||Tx||/||x||. Multistart; deterministic per
// seed. A lower bound for general (p,q) pairs rather than a certificate.
inline AscentResult ascent_operator_norm(const LinearOperator& op,
                                         std::uint64_t seed, int starts = 16,
                                         double min_step = 1e-12) {
  const std::size_t n = op.matrix.cols;
  auto ratio = [&](const RealVec& r) -> double {
    Vec x = unpack(r);
    double sx = op.source(x);
    if (!(sx > 0.0)) return 0.0;
    return -op.target(op.apply(x)) / sx;
  };

  std::vector<Vec> seeds;
  Rng rng(seed);
  for (std::size_t j = 0; j < n; ++j) seeds.push_back(unit_vector(n, j));
  for (int s = 0; s < starts; ++s)
    seeds.push_back(sample_unit_vector(op.source, SampleMode::OnSphere, rng));

  AscentResult best;
  PatternSearchOptions pat;
  pat.initial_step = 0.5;
  pat.min_step = min_step;
  for (const auto& s : seeds) {
    RealVec x = pack(s);
    double v = -pattern_search(ratio, x, pat, seed);
    if (v > best.value) {
      best.value = v;
      best.witness = unpack(x);
    }
  }
  if (best.witness.empty()) best.witness = unit_vector(n, 0);
  best.witness = normalize_into_ball(best.witness, op.source);
  best.value = op.target(op.apply(best.witness));
  return best;
}

struct PowerIterationResult {
  double sigma = 0.0;
  Vec right_vector;
  bool converged = false;
};

// Power iteration on the normal operator (A^H A or A A^H, whichever is
// smaller). The Rayleigh sequence is monotone for PSD matrices; an Aitken
// extrapolation of its geometric tail supplies the stopping estimate, which
// matters when the two leading singular values nearly tie.
inline PowerIterationResult power_iteration_sigma_max(const Matrix& a,
                                                      double rel_tol,
                                                      std::uint64_t seed,
                                                      int max_iter = 10000) {
  PowerIterationResult res;
  const bool use_left = a.rows < a.cols;
  const Matrix ah = a.adjoint();
  const std::size_t n = use_left ? a.rows : a.cols;

  auto apply_normal = [&](const Vec& v) {
    return use_left ? matvec(a, matvec(ah, v)) : matvec(ah, matvec(a, v));
  };

  Rng rng(seed);
  Vec v = rng.gaussian_vector(n, !a.is_real());
  double nv = norm2(v);
  v = scale(Complex(1.0 / nv, 0.0), v);

  double lambda_prev = 0.0, delta_prev = 0.0;
  double lambda = 0.0;
  double aitken = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Vec w = apply_normal(v);
    lambda = inner(v, w).real();
    double wn = norm2(w);
    if (wn == 0.0) {  // zero operator (or v in the kernel of a PSD map)
      res.sigma = 0.0;
      res.converged = true;
      res.right_vector = use_left ? Vec() : v;
      break;
    }
    v = scale(Complex(1.0 / wn, 0.0), w);
    double delta = lambda - lambda_prev;
    if (it > 4) {
      double r = (delta_prev > 0.0 && delta > 0.0) ? delta / delta_prev : 0.0;
      aitken = (r > 0.0 && r < 1.0) ? delta * r / (1.0 - r) : 0.0;
      bool small_step = std::abs(delta) <= 1e-10 * std::max(1.0, lambda);
      // delta <= 0 means the Rayleigh sequence hit its rounding plateau
      bool small_tail =
          delta <= 0.0 || (r < 1.0 && aitken <= rel_tol * std::max(1e-300, lambda));
      if (small_step && small_tail) {
        res.converged = true;
        break;
      }
    }
    lambda_prev = lambda;
    delta_prev = delta;
  }
  if (res.sigma == 0.0 && lambda > 0.0) {
    res.sigma = std::sqrt(lambda + std::max(0.0, aitken));
    Vec right = use_left ? matvec(ah, v) : v;
    double rn = norm2(right);
    if (rn > 0.0) right = scale(Complex(1.0 / rn, 0.0), right);
    res.right_vector = right;
  }
  if (res.right_vector.empty()) res.right_vector = unit_vector(a.cols, 0);
  return res;
}

}  // namespace detail

/// Operator norm sup{||Tx|| : ||x|| <= 1} with closed-form dispatch where the
/// norm pair allows it, power iteration for the 2->2 case, and multistart
/// ascent plus sampling otherwise. Reports all three sup variants; the
/// open-ball variant is the sphere value scaled by (1 - tol).
inline OperatorNormResult operator_norm(const LinearOperator& op, double tol,
                                        std::uint64_t seed = 0) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const Matrix& a = op.matrix;
  OperatorNormResult res;

  if (op.source.is_p(1.0)) {
    std::size_t best = 0;
    double value = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) {
      double c = op.target(a.column(j));
      if (c > value) {
        value = c;
        best = j;
      }
    }
    res.value = value;
    res.method = OpNormMethod::ClosedForm;
    res.witness = unit_vector(a.cols, best);
    res.upper_bound = value;
    res.certified = true;
  } else if (op.target.is_p(kInfExponent) && op.source.kind() == NormSpec::Kind::P) {
    double value = 0.0;
    Vec witness = unit_vector(a.cols, 0);
    for (std::size_t i = 0; i < a.rows; ++i) {
      auto [v, w] = detail::holder_equality_witness(a.row(i),
                                                    op.source.exponent());
      if (v > value) {
        value = v;
        witness = w;
      }
    }
    res.value = value;
    res.method = OpNormMethod::ClosedForm;
    res.witness = witness;
    res.upper_bound = value;
    res.certified = true;
  } else if (op.source.is_p(2.0) && op.target.is_p(2.0)) {
    auto pit = detail::power_iteration_sigma_max(a, tol, seed ^ 0x517cc1b7u);
    if (pit.converged) {
      res.value = pit.sigma;
      res.method = OpNormMethod::PowerIteration;
      res.witness = pit.right_vector;
      res.certified = true;
    } else {
      auto asc = detail::ascent_operator_norm(op, seed);
      res.value = std::max(pit.sigma, asc.value);
      res.witness = asc.value >= pit.sigma ? asc.witness : pit.right_vector;
      res.method = OpNormMethod::MultistartAscent;
      res.power_iteration_converged = false;
    }
  } else {
    auto asc = detail::ascent_operator_norm(op, seed);
    res.value = asc.value;
    res.witness = asc.witness;
    res.method = OpNormMethod::MultistartAscent;
  }

  res.witness = detail::normalize_into_ball(res.witness, op.source);
  res.certified_lower = op.target(op.apply(res.witness));

  // Sampling pass: a genuine lower bound and the material for the ball /
  // sphere / open-ball sup comparison.
  Rng rng(seed ^ 0xa3c59ac2u);
  double best_sphere = res.certified_lower, best_ball = 0.0;
  const std::size_t probes = std::min<std::size_t>(2000, 200 * a.cols);
  for (std::size_t s = 0; s < probes; ++s) {
    Vec xs = sample_unit_vector(op.source, SampleMode::OnSphere, rng);
    best_sphere = std::max(best_sphere, op.target(op.apply(xs)));
    Vec xb = scale(Complex(rng.uniform(), 0.0), xs);
    best_ball = std::max(best_ball, op.target(op.apply(xb)));
  }
  if (best_sphere > res.value) {
    if (!res.certified) {
      res.value = best_sphere;
      res.method = OpNormMethod::Sampling;
    }
  }
  res.sup_sphere = std::max(res.value, best_sphere);
  res.sup_ball = std::max(res.sup_sphere, best_ball);
  res.sup_open = (1.0 - tol) * res.sup_sphere;
  return res;
}

struct ContinuityCertificate {
  double bound_M = 0.0;
  std::size_t samples = 0;
  std::vector<Vec> violations;
  bool certified() const { return violations.empty(); }
};

/// Checks ||Tx|| <= M ||x|| with M = ||T|| on seeded samples; violations
/// beyond the 1e-9 relative slack are listed, not thrown.
inline ContinuityCertificate continuity_certificate(const LinearOperator& op,
                                                    std::size_t samples,
                                                    std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  ContinuityCertificate cert;
  cert.bound_M = operator_norm(op, 1e-9, seed).value;
  cert.samples = samples;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Vec x = rng.gaussian_vector(op.matrix.cols, true);
    double lhs = op.target(op.apply(x));
    double rhs = cert.bound_M * op.source(x);
    if (lhs > rhs * (1.0 + 1e-9) && cert.violations.size() < 8)
      cert.violations.push_back(x);
  }
  return cert;
}

struct IsometryReport {
  bool norm_preserving = true;
  bool distance_preserving = true;
  bool injective = false;
  double max_norm_deviation = 0.0;
  std::optional<double> operator_norm_value;
  std::optional<Vec> counterexample;
  bool isometric() const {
    return norm_preserving && distance_preserving && injective;
  }
};

/// Samples ||Tx|| = ||x|| and pairwise distance preservation, checks kernel
/// triviality by rank, and confirms operator norm 1 for isometries.
inline IsometryReport isometry_test(const LinearOperator& op,
                                    std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  IsometryReport rep;
  const double tol = 1e-10;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Vec x = rng.gaussian_vector(op.matrix.cols, true);
    double dev = std::abs(op.target(op.apply(x)) - op.source(x));
    rep.max_norm_deviation = std::max(rep.max_norm_deviation, dev);
    if (dev > tol * std::max(1.0, op.source(x))) {
      rep.norm_preserving = false;
      if (!rep.counterexample) rep.counterexample = x;
    }
    Vec y = rng.gaussian_vector(op.matrix.cols, true);
    Vec txy = sub(op.apply(x), op.apply(y));
    double ddev = std::abs(op.target(txy) - op.source(sub(x, y)));
    if (ddev > tol * std::max(1.0, op.source(sub(x, y)))) {
      rep.distance_preserving = false;
      if (!rep.counterexample) rep.counterexample = sub(x, y);
    }
  }
  rep.injective = rank(op.matrix) == op.matrix.cols;
  if (rep.isometric())
    rep.operator_norm_value = operator_norm(op, 1e-9, seed).value;
  return rep;
}

}  // namespace normkit

#endif
