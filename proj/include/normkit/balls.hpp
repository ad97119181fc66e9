// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_BALLS_HPP
#define NORMKIT_BALLS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "normkit/norms.hpp"
#include "normkit/sampling.hpp"

namespace normkit {

struct BallSpec {
  Vec center;
  double radius = 1.0;
  NormSpec norm = NormSpec::p_norm(2.0, 1);
  bool closed = false;

  BallSpec(Vec c, double r, NormSpec n, bool cl = false)
      : center(std::move(c)), radius(r), norm(std::move(n)), closed(cl) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball radius must be > 0");
    if (center.size() != norm.dim())
      throw std::invalid_argument("ball center/norm dimension mismatch");
  }
};

struct GeometryCounterexample {
  std::string check;
  Vec x;
  Vec y;
  double t = 0.0;
  double eps = 0.0;
  double error = 0.0;
};

struct GeometryReport {
  std::size_t convexity_trials = 0;
  std::size_t convexity_violations = 0;
  double max_convexity_excess = 0.0;  // worst ||(1-t)x+ty - a|| - radius
  std::size_t closure_trials = 0;
  std::size_t closure_violations = 0;
  double max_closure_error = 0.0;
  std::vector<GeometryCounterexample> counterexamples;
  bool pass = true;
};

/// Fuzzes two ball facts: convex combinations of ball points stay in the
/// ball, and the midpoint-style witness z = a + (1 - eps/(2 gamma))(y - a)
/// built from a sphere point y sits at distance eps/2 from y and
/// (2 gamma - eps)/2 from the center, both strictly inside.
inline GeometryReport ball_geometry_check(const BallSpec& ball,
                                          std::size_t trials,
                                          std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  const double tol = 1e-10;
  const double gamma = ball.radius;
  GeometryReport report;
  Rng rng(seed);

  auto record = [&](GeometryCounterexample ce) {
    if (report.counterexamples.size() < 8)
      report.counterexamples.push_back(std::move(ce));
  };

  report.convexity_trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    Vec ux = sample_unit_vector(ball.norm, SampleMode::InBall, rng);
    Vec uy = sample_unit_vector(ball.norm, SampleMode::InBall, rng);
    Vec x = axpy(Complex(gamma, 0.0), ux, ball.center);
    Vec y = axpy(Complex(gamma, 0.0), uy, ball.center);
    double t = rng.uniform();
    Vec combo = add(scale(Complex(1.0 - t, 0.0), x), scale(Complex(t, 0.0), y));
    double excess = ball.norm(sub(combo, ball.center)) - gamma;
    report.max_convexity_excess = std::max(report.max_convexity_excess, excess);
    if (excess > tol * std::max(1.0, gamma)) {
      ++report.convexity_violations;
      record({"convexity", x, y, t, 0.0, excess});
    }
  }

  report.closure_trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    Vec u = sample_unit_vector(ball.norm, SampleMode::OnSphere, rng);
    Vec y = axpy(Complex(gamma, 0.0), u, ball.center);
    double eps = rng.uniform(0.0, 2.0 * gamma);
    if (eps == 0.0) eps = gamma;
    Complex shrink(1.0 - eps / (2.0 * gamma), 0.0);
    Vec z = axpy(shrink, sub(y, ball.center), ball.center);

    double dzy = ball.norm(sub(z, y));
    double dza = ball.norm(sub(z, ball.center));
    double err = std::max(std::abs(dzy - eps / 2.0),
                          std::abs(dza - (2.0 * gamma - eps) / 2.0));
    report.max_closure_error = std::max(report.max_closure_error, err);
    bool inside = dzy < gamma && dza < gamma;
    if (err > tol * std::max(1.0, gamma) || !inside) {
      ++report.closure_violations;
      record({"closure", z, y, 0.0, eps, err});
    }
  }

  report.pass =
      report.convexity_violations == 0 && report.closure_violations == 0;
  return report;
}

}  // namespace normkit

#endif
