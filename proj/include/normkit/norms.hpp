// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_NORMS_HPP
#define NORMKIT_NORMS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "normkit/matrix.hpp"
#include "normkit/rng.hpp"
#include "normkit/vector.hpp"

namespace normkit {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// p-norm of a coordinate vector, p in [1, inf]. General exponents factor
/// out the max modulus before powering.
inline double pnorm(const Vec& x, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p-norm exponent below 1");
  if (p == kInfExponent) {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (const auto& v : x) s += std::abs(v);
    return s;
  }
  if (p == 2.0) return norm2(x);
  double m = 0.0;
  for (const auto& v : x) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& v : x) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s, 1.0 / p);
}

/// A named norm on K^n: p-norm with exponent in [1, inf], basis-zero norm
/// (max modulus of the coordinates in a fixed basis), or a user evaluator.
/// The norm axioms are contracts checked by check_norm_axioms, not assumed.
class NormSpec {
 public:
  enum class Kind { P, Zero, Custom };

  static NormSpec p_norm(double p, std::size_t dim) {
    if (!(p >= 1.0))
      throw std::invalid_argument("p-norm exponent below 1 is not a norm");
    if (dim == 0) throw std::invalid_argument("norm dimension must be positive");
    NormSpec n;
    n.kind_ = Kind::P;
    n.p_ = p;
    n.dim_ = dim;
    return n;
  }

  static NormSpec zero_norm(std::vector<Vec> basis) {
    if (basis.empty()) throw std::invalid_argument("zero norm needs a basis");
    NormSpec n;
    n.kind_ = Kind::Zero;
    n.dim_ = basis[0].size();
    if (basis.size() != n.dim_)
      throw std::invalid_argument("basis does not span the space");
    Matrix b = Matrix::from_columns(basis);
    n.basis_ = std::move(basis);
    n.lu_ = std::make_shared<LuFactorization>(b);
    if (n.lu_->singular())
      throw std::invalid_argument("singular basis for zero norm");
    return n;
  }

  static NormSpec zero_norm_standard(std::size_t dim) {
    std::vector<Vec> basis;
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit_vector(dim, i));
    return zero_norm(std::move(basis));
  }

  static NormSpec custom(std::string name, std::size_t dim,
                         std::function<double(const Vec&)> eval) {
    if (dim == 0) throw std::invalid_argument("norm dimension must be positive");
    NormSpec n;
    n.kind_ = Kind::Custom;
    n.dim_ = dim;
    n.name_ = std::move(name);
    n.eval_ = std::move(eval);
    return n;
  }

  Kind kind() const { return kind_; }
  double exponent() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<Vec>& basis() const { return basis_; }

  bool is_p(double p) const { return kind_ == Kind::P && p_ == p; }

  /// Coordinates of x in the zero norm's basis.
  Vec coordinates(const Vec& x) const {
    if (kind_ != Kind::Zero)
      throw std::logic_error("coordinates are defined for the zero norm only");
    return lu_->solve(x);
  }

  double operator()(const Vec& x) const {
    if (x.size() != dim_)
      throw std::invalid_argument("norm/vector dimension mismatch");
    switch (kind_) {
      case Kind::P:
        return eval_p(x);
      case Kind::Zero: {
        Vec alpha = lu_->solve(x);
        double m = 0.0;
        for (const auto& a : alpha) m = std::max(m, std::abs(a));
        return m;
      }
      case Kind::Custom:
        return eval_(x);
    }
    return 0.0;  // unreachable
  }

  /// Conjugate-exponent dual; closed form for p-norms only. The numeric
  /// dual of zero/custom norms is built elsewhere on top of the norming
  /// machinery.
  NormSpec dual() const {
    if (kind_ != Kind::P)
      throw std::logic_error("closed-form dual exists only for p-norms");
    double q;
    if (p_ == kInfExponent)
      q = 1.0;
    else if (p_ == 1.0)
      q = kInfExponent;
    else
      q = p_ / (p_ - 1.0);
    NormSpec d = p_norm(q, dim_);
    d.dual_primal_ = std::make_shared<NormSpec>(*this);
    return d;
  }

  bool marked_dual() const { return dual_primal_ != nullptr; }
  const NormSpec& dual_primal() const {
    if (!dual_primal_) throw std::logic_error("norm is not marked as a dual");
    return *dual_primal_;
  }
  void mark_dual_of(const NormSpec& primal) {
    dual_primal_ = std::make_shared<NormSpec>(primal);
  }

 private:
  double eval_p(const Vec& x) const { return pnorm(x, p_); }

  Kind kind_ = Kind::P;
  double p_ = 2.0;
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<Vec> basis_;
  std::shared_ptr<LuFactorization> lu_;
  std::function<double(const Vec&)> eval_;
  std::shared_ptr<NormSpec> dual_primal_;
};

inline double eval_norm(const NormSpec& norm, const Vec& x) { return norm(x); }

struct AxiomCounterexample {
  std::string axiom;
  Vec x;
  Vec y;          // second vector for the triangle inequality
  Complex alpha;  // scaling factor for homogeneity
  double lhs = 0.0;
  double rhs = 0.0;
};

struct AxiomReport {
  bool nonnegativity = true;
  bool definiteness = true;
  bool homogeneity = true;
  bool triangle = true;
  std::size_t samples = 0;
  std::vector<AxiomCounterexample> counterexamples;

  bool all_pass() const {
    return nonnegativity && definiteness && homogeneity && triangle;
  }
};

/// Property-checks the four norm axioms on seeded random vectors.
/// Deterministic given (samples, seed). Counterexamples are collected,
/// not thrown.
inline AxiomReport check_norm_axioms(const NormSpec& norm, std::size_t samples,
                                     std::uint64_t seed,
                                     bool complex_field = true) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  AxiomReport report;
  report.samples = samples;
  Rng rng(seed);
  const double rel_tol = 1e-12;

  const Vec zero = zeros(norm.dim());
  double at_zero = norm(zero);
  if (!(at_zero == 0.0)) {
    report.definiteness = false;
    report.counterexamples.push_back(
        {"definiteness", zero, {}, Complex(0, 0), at_zero, 0.0});
  }

  auto note = [&](const char* axiom, const Vec& x, const Vec& y, Complex a,
                  double lhs, double rhs, bool& flag) {
    flag = false;
    if (report.counterexamples.size() < 8)
      report.counterexamples.push_back({axiom, x, y, a, lhs, rhs});
  };

  for (std::size_t s = 0; s < samples; ++s) {
    Vec x = rng.gaussian_vector(norm.dim(), complex_field);
    Vec y = rng.gaussian_vector(norm.dim(), complex_field);
    double nx = norm(x);
    double ny = norm(y);

    if (!(nx >= 0.0))
      note("nonnegativity", x, {}, Complex(0, 0), nx, 0.0,
           report.nonnegativity);
    if (nx <= 0.0 && norm2(x) > 0.0)
      note("definiteness", x, {}, Complex(0, 0), nx, 0.0, report.definiteness);

    Complex alpha = complex_field ? rng.normal_complex()
                                  : Complex(rng.normal(), 0.0);
    double scaled = norm(scale(alpha, x));
    double expect = std::abs(alpha) * nx;
    if (std::abs(scaled - expect) >
        rel_tol * std::max({1.0, scaled, expect}))
      note("homogeneity", x, {}, alpha, scaled, expect, report.homogeneity);

    double nsum = norm(add(x, y));
    if (nsum > (nx + ny) * (1.0 + rel_tol) + rel_tol)
      note("triangle", x, y, Complex(0, 0), nsum, nx + ny, report.triangle);
  }
  return report;
}

}  // namespace normkit

#endif
