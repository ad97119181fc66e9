// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_HAHN_BANACH_HPP
#define NORMKIT_HAHN_BANACH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "normkit/matrix.hpp"
#include "normkit/norms.hpp"
#include "normkit/operators.hpp"
#include "normkit/optimize.hpp"

// Real scalars only in this module, matching the one-step extension's real
// derivation; complex inputs are rejected up front.

namespace normkit {

struct extension_direction_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct separation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear functional defined on a spanned subspace M of (R^n, ||.||),
/// carried as basis vectors plus the values on them. Evaluation at a stored
/// basis vector returns the stored value bit-for-bit; extensions copy values
/// rather than recompute them.
struct SubspaceFunctional {
  std::vector<Vec> basis;
  std::vector<double> values;
  NormSpec ambient_norm = NormSpec::p_norm(2.0, 1);
  double subspace_norm_of_f = 0.0;
  Vec norm_witness;

  std::size_t subspace_dim() const { return basis.size(); }
  std::size_t ambient_dim() const { return ambient_norm.dim(); }
  bool full_space() const { return basis.size() == ambient_norm.dim(); }
};

namespace detail {

inline Vec combine_basis(const std::vector<Vec>& basis, const RealVec& c) {
  Vec y = zeros(basis[0].size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    y = axpy(Complex(c[i], 0.0), basis[i], y);
  return y;
}

inline double linear_value(const std::vector<double>& values,
                           const RealVec& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * c[i];
  return s;
}

// Coefficient vector w with F = <w, .> for a full-space functional.
inline Vec functional_coefficients(const SubspaceFunctional& f) {
  if (!f.full_space())
    throw std::logic_error("coefficients need a full-space functional");
  Matrix bt = Matrix::from_columns(f.basis).transpose();
  LuFactorization lu(bt);
  Vec v(f.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Complex(f.values[i], 0.0);
  return lu.solve(v);
}

}  // namespace detail

/// sup |f(y)| over the unit ball of M, by multistart ascent on the
/// scale-invariant ratio |f(y)|/||y|| in basis coordinates. Closed forms:
/// one-dimensional subspaces, and full-space functionals against a p-norm
/// (conjugate-exponent dual norm of the coefficient vector).
inline double functional_subspace_norm(const SubspaceFunctional& f, double tol,
                                       Vec* witness = nullptr,
                                       std::uint64_t seed = 0) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const std::size_t k = f.basis.size();

  if (k == 1) {
    double nb = f.ambient_norm(f.basis[0]);
    if (!(nb > 0.0)) throw std::invalid_argument("degenerate basis vector");
    if (witness) *witness = scale(Complex(1.0 / nb, 0.0), f.basis[0]);
    return std::abs(f.values[0]) / nb;
  }

  if (f.full_space() && f.ambient_norm.kind() == NormSpec::Kind::P) {
    Vec w = detail::functional_coefficients(f);
    auto [value, x] =
        detail::holder_equality_witness(w, f.ambient_norm.exponent());
    if (witness) *witness = x;
    return value;
  }

  auto objective = [&](const RealVec& c) -> double {
    Vec y = detail::combine_basis(f.basis, c);
    double ny = f.ambient_norm(y);
    if (!(ny > 0.0)) return 0.0;
    return -std::abs(detail::linear_value(f.values, c)) / ny;
  };

  std::vector<RealVec> starts;
  for (std::size_t i = 0; i < k; ++i) {
    RealVec e(k, 0.0);
    e[i] = 1.0;
    starts.push_back(e);
    e[i] = -1.0;
    starts.push_back(e);
  }
  MinimizeOptions opt;
  opt.tol = tol * 1e-3;
  opt.random_starts = 8;
  opt.seed = seed ^ 0x8f1bbcdcu;
  opt.pattern.initial_step = 0.5;
  opt.pattern.min_step = 1e-13;
  auto res = minimize_convex(objective, k, starts, opt);
  if (witness) {
    Vec y = detail::combine_basis(f.basis, res.arg);
    double ny = f.ambient_norm(y);
    *witness = ny > 0.0 ? scale(Complex(1.0 / ny, 0.0), y) : y;
  }
  return -res.value;
}

/// Builds a subspace functional; validates real inputs and basis
/// independence, and computes the subspace norm of f.
inline SubspaceFunctional make_subspace_functional(std::vector<Vec> basis,
                                                   std::vector<double> values,
                                                   NormSpec ambient_norm,
                                                   double tol = 1e-9,
                                                   std::uint64_t seed = 0) {
  if (basis.empty() || basis.size() != values.size())
    throw std::invalid_argument("basis/values size mismatch");
  for (const auto& b : basis) {
    if (b.size() != ambient_norm.dim())
      throw std::invalid_argument("basis/norm dimension mismatch");
    require_real(b, "hahn-banach subspace basis (real case only)");
  }
  if (rank(Matrix::from_columns(basis)) != basis.size())
    throw std::invalid_argument("dependent subspace basis");

  SubspaceFunctional f;
  f.basis = std::move(basis);
  f.values = std::move(values);
  f.ambient_norm = std::move(ambient_norm);
  f.subspace_norm_of_f = functional_subspace_norm(f, tol, &f.norm_witness, seed);
  return f;
}

/// Evaluates f at y in M. Stored basis vectors short-circuit to the stored
/// values; other points are resolved by least squares and rejected when the
/// residual says y is outside M.
inline double evaluate(const SubspaceFunctional& f, const Vec& y) {
  require_real(y, "hahn-banach argument (real case only)");
  for (std::size_t i = 0; i < f.basis.size(); ++i)
    if (f.basis[i] == y) return f.values[i];
  Matrix b = Matrix::from_columns(f.basis);
  Vec c = least_squares(b, y);
  Vec recon = matvec(b, c);
  if (norm2(sub(recon, y)) > 1e-8 * (1.0 + norm2(y)))
    throw std::domain_error("point is not in the functional's subspace");
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += f.values[i] * c[i].real();
  return s;
}

inline Vec coefficients(const SubspaceFunctional& f) {
  Vec w = detail::functional_coefficients(f);
  require_real(w, "functional coefficients");
  return w;
}

enum class ExtensionChoice { Midpoint, LowerEnd, UpperEnd };

struct ExtensionStep {
  double a = 0.0;  // sup_y (-f(y) - ||f|| ||y + x0||)
  double b = 0.0;  // inf_y (-f(y) + ||f|| ||y + x0||)
  double c = 0.0;  // chosen value g(x0), in [a, b]
  Vec x0;
  double measured_norm_ratio = 1.0;  // ||g|| / ||f|| re-measured after the step
};

/// One extension step M -> M + span{x0}: solves the two convex programs for
/// the admissible interval [a, b], picks c (midpoint by default) and returns
/// g with g|M = f value-for-value and g(x0) = c. The interval endpoints use
/// the signed f(y); the target bound |f(m) + c| <= ||f|| ||m + x0|| is what
/// the property suite checks.
inline std::pair<SubspaceFunctional, ExtensionStep> one_step_extension(
    const SubspaceFunctional& f, const Vec& x0, double tol,
    ExtensionChoice choice = ExtensionChoice::Midpoint,
    std::uint64_t seed = 0) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  require_real(x0, "extension direction (real case only)");
  if (x0.size() != f.ambient_dim())
    throw std::invalid_argument("extension direction dimension mismatch");
  std::vector<Vec> extended = f.basis;
  extended.push_back(x0);
  if (rank(Matrix::from_columns(extended)) != extended.size())
    throw extension_direction_error(
        "extension direction already lies in the subspace");

  const std::size_t k = f.basis.size();
  const double fn = f.subspace_norm_of_f;

  auto sup_objective = [&](const RealVec& c) {  // minimized: f(y) + ||f|| ||y + x0||
    Vec y = detail::combine_basis(f.basis, c);
    return detail::linear_value(f.values, c) + fn * f.ambient_norm(add(y, x0));
  };
  auto inf_objective = [&](const RealVec& c) {  // minimized: -f(y) + ||f|| ||y + x0||
    Vec y = detail::combine_basis(f.basis, c);
    return -detail::linear_value(f.values, c) + fn * f.ambient_norm(add(y, x0));
  };

  MinimizeOptions opt;
  opt.tol = std::min(tol, 1e-9) * 1e-2;
  opt.random_starts = 6;
  opt.start_scale = 1.0 + norm2(x0);
  opt.seed = seed ^ 0x2545f491u;
  opt.pattern.initial_step = 1.0 + norm2(x0);
  opt.pattern.min_step = 1e-13;
  // The infimum can sit at infinity (recession direction of norm - linear);
  // the radius bounds both the walk and the cancellation noise.
  opt.pattern.max_step = 1e6 * (1.0 + norm2(x0));
  opt.pattern.max_radius = 1e7 * (1.0 + norm2(x0));
  std::vector<RealVec> starts = {RealVec(k, 0.0)};

  ExtensionStep step;
  step.x0 = x0;
  step.a = -minimize_convex(sup_objective, k, starts, opt).value;
  step.b = minimize_convex(inf_objective, k, starts, opt).value;

  double scale_ab = std::max({1.0, std::abs(step.a), std::abs(step.b)});
  if (step.a > step.b + std::max(tol, 1e-6) * scale_ab)
    throw std::runtime_error(
        "one-step interval collapsed (a > b): solver failure, a = " +
        std::to_string(step.a) + ", b = " + std::to_string(step.b));
  if (step.a > step.b) {
    // interval is a numerically degenerate point; a <= b is a theorem
    double mid = 0.5 * (step.a + step.b);
    step.a = mid;
    step.b = mid;
  }

  switch (choice) {
    case ExtensionChoice::Midpoint: step.c = 0.5 * (step.a + step.b); break;
    case ExtensionChoice::LowerEnd: step.c = step.a; break;
    case ExtensionChoice::UpperEnd: step.c = step.b; break;
  }

  SubspaceFunctional g;
  g.basis = f.basis;
  g.basis.push_back(x0);
  g.values = f.values;  // copied, not recomputed
  g.values.push_back(step.c);
  g.ambient_norm = f.ambient_norm;
  // Norm preservation is the theorem; the propagated value keeps later steps
  // from compounding measurement error. The measured ratio is reported.
  g.subspace_norm_of_f = fn;
  double measured = functional_subspace_norm(g, tol, &g.norm_witness, seed);
  step.measured_norm_ratio = fn > 0.0 ? measured / fn : 1.0;
  return {std::move(g), step};
}

/// Completes M's basis with greedily chosen standard basis vectors (largest
/// residual against the current span) and iterates the one-step extension to
/// the whole space. F|M = f exactly; ||F|| stays within (1 + n tol) of ||f||.
inline SubspaceFunctional extend_functional(
    const SubspaceFunctional& f, double tol,
    ExtensionChoice choice = ExtensionChoice::Midpoint,
    std::vector<ExtensionStep>* steps = nullptr, std::uint64_t seed = 0) {
  SubspaceFunctional cur = f;
  const std::size_t n = f.ambient_dim();
  while (cur.basis.size() < n) {
    // pick e_i with the largest Euclidean distance to span(cur.basis)
    Matrix b = Matrix::from_columns(cur.basis);
    double best_res = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = unit_vector(n, i);
      Vec c = least_squares(b, e);
      double res = norm2(sub(e, matvec(b, c)));
      if (res > best_res) {
        best_res = res;
        best_i = i;
      }
    }
    auto [g, st] = one_step_extension(cur, unit_vector(n, best_i), tol, choice,
                                      seed + cur.basis.size());
    if (steps) steps->push_back(st);
    cur = std::move(g);
  }
  return cur;
}

/// Norming functional for x != 0: seed f(alpha x) = alpha ||x|| on span{x},
/// then extend. The result pairs with x to exactly ||x|| and has norm 1 up
/// to the solver tolerance.
inline SubspaceFunctional norming_functional(const Vec& x, const NormSpec& norm,
                                             double tol,
                                             std::uint64_t seed = 0) {
  require_real(x, "norming functional argument");
  double nx = norm(x);
  if (!(nx > 0.0))
    throw std::invalid_argument("no norming functional for the zero vector");
  SubspaceFunctional f =
      make_subspace_functional({x}, {nx}, norm, tol, seed);
  return extend_functional(f, tol, ExtensionChoice::Midpoint, nullptr, seed);
}

/// Distance from x to span(basis) under the given norm, with the minimizer.
inline std::pair<double, Vec> distance_to_subspace(
    const Vec& x, const std::vector<Vec>& basis, const NormSpec& norm,
    double tol, std::uint64_t seed = 0) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  require_real(x, "distance argument");
  for (const auto& b : basis) require_real(b, "distance subspace basis");
  Matrix bm = Matrix::from_columns(basis);
  if (rank(bm) != basis.size())
    throw std::invalid_argument("dependent subspace basis");

  auto objective = [&](const RealVec& c) {
    return norm(sub(x, detail::combine_basis(basis, c)));
  };
  std::vector<RealVec> starts = {RealVec(basis.size(), 0.0)};
  Vec ls = least_squares(bm, x);
  RealVec ls_start(basis.size());
  for (std::size_t i = 0; i < ls.size(); ++i) ls_start[i] = ls[i].real();
  starts.push_back(ls_start);

  MinimizeOptions opt;
  opt.tol = tol * 1e-2;
  opt.random_starts = 4;
  opt.start_scale = 1.0 + norm2(x);
  opt.seed = seed ^ 0x94d049bbu;
  opt.pattern.initial_step = 1.0 + norm2(x);
  opt.pattern.min_step = 1e-13;
  auto res = minimize_convex(objective, basis.size(), starts, opt);
  return {res.value, detail::combine_basis(basis, res.arg)};
}

/// Separating functional: value 1 at x, zero on span(basis), built from the
/// seed f(y + alpha x) = alpha on F + span{x} whose norm the distance bound
/// controls (|alpha| <= ||y + alpha x|| / d(x, F)), then extended.
inline SubspaceFunctional annihilating_functional(
    const Vec& x, const std::vector<Vec>& basis, const NormSpec& norm,
    double tol, std::uint64_t seed = 0) {
  auto [dist, closest] = distance_to_subspace(x, basis, norm, tol, seed);
  (void)closest;
  if (!(dist > tol))
    throw separation_error(
        "separation impossible: x is within tol of the subspace");

  std::vector<Vec> mbasis = basis;
  mbasis.push_back(x);
  std::vector<double> values(basis.size(), 0.0);
  values.push_back(1.0);
  SubspaceFunctional f =
      make_subspace_functional(std::move(mbasis), std::move(values), norm, tol,
                               seed);
  // Tighten with the exact identity ||f|| = 1/d(x, F); both routes estimate
  // from below, so the max is still a lower estimate of the true norm.
  f.subspace_norm_of_f = std::max(f.subspace_norm_of_f, 1.0 / dist);
  return extend_functional(f, tol, ExtensionChoice::Midpoint, nullptr, seed);
}

}  // namespace normkit

#endif
