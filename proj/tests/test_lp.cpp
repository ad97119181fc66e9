// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <numbers>

#include "normkit/lp.hpp"

using namespace normkit;

TEST_CASE("finite-support lp norm is exact: [5, 5]") {
  auto x = TruncatedSequence::finite(real_vector({3.0, 4.0, 0.0}), 2.0);
  auto iv = lp_norm(x);
  CHECK(iv.lower == 5.0);
  CHECK(iv.upper == 5.0);
}

TEST_CASE("the zero sequence has norm interval [0, 0]") {
  auto x = TruncatedSequence::finite(zeros(4), 3.0);
  auto iv = lp_norm(x);
  CHECK(iv.lower == 0.0);
  CHECK(iv.upper == 0.0);
}

TEST_CASE("1/j in l^2 brackets the Basel value pi/sqrt(6)") {
  auto x = TruncatedSequence::generator("1/j", 2.0, 1000);
  CHECK(x.tail_bound() == Catch::Approx(1.0 / std::sqrt(1000.0)).epsilon(1e-12));
  auto iv = lp_norm(x);
  double basel = std::numbers::pi / std::sqrt(6.0);
  CHECK(iv.lower <= basel);
  CHECK(basel <= iv.upper);
  CHECK(iv.upper - iv.lower <= 1e-3);
}

TEST_CASE("generator tails need kp > 1") {
  CHECK_THROWS_AS(TruncatedSequence::generator("1/j", 1.0, 100),
                  std::invalid_argument);
  CHECK_NOTHROW(TruncatedSequence::generator("1/j^2", 1.0, 100));
  CHECK_THROWS_AS(TruncatedSequence::generator("1/log j", 2.0, 10),
                  std::invalid_argument);
}

TEST_CASE("conjugate pair identity (q-1) p = q") {
  for (double p : {1.5, 2.0, 3.0, 7.0}) {
    auto pair = ConjugatePair::from_p(p);
    CHECK(pair.valid());
    CHECK((pair.q - 1.0) * pair.p == Catch::Approx(pair.q).epsilon(1e-12));
  }
  auto ext = ConjugatePair::from_p(1.0);
  CHECK(ext.extension());
  CHECK(ext.q == kInfExponent);
}

TEST_CASE("Hoelder pairing: single coordinate equality") {
  auto e1p = TruncatedSequence::finite({Complex(1.0, 0.0)}, 2.0);
  auto e1q = TruncatedSequence::finite({Complex(1.0, 0.0)}, 2.0);
  auto rep = holder_pairing(e1p, e1q, ConjugatePair::from_p(2.0));
  CHECK(rep.prefix_sum == 1.0);
  CHECK(rep.bound == 1.0);
  CHECK(rep.pass);
}

TEST_CASE("Hoelder pairing: parallel vectors reach the Cauchy-Schwarz bound") {
  auto x = TruncatedSequence::finite(real_vector({1.0, 1.0, 0.0}), 2.0);
  auto y = TruncatedSequence::finite(real_vector({1.0, 1.0, 0.0}), 2.0);
  auto rep = holder_pairing(x, y, ConjugatePair::from_p(2.0));
  CHECK(rep.prefix_sum == Catch::Approx(2.0).epsilon(1e-14));
  CHECK(rep.bound == Catch::Approx(2.0).epsilon(1e-14));
  CHECK(rep.power_sum_x == Catch::Approx(1.0).margin(1e-10));
  CHECK(rep.power_sum_y == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("random 64-term pairing at p = 3 stays below the bound") {
  Rng rng(64);
  auto pair = ConjugatePair::from_p(3.0);
  auto x = TruncatedSequence::finite(rng.gaussian_vector(64, true), 3.0);
  auto y = TruncatedSequence::finite(rng.gaussian_vector(64, true), pair.q);
  auto rep = holder_pairing(x, y, pair);
  CHECK(rep.pass);
  CHECK(rep.slack > 0.0);
  CHECK(rep.young_max_violation <= 1e-12);
}

TEST_CASE("pairing with certified tails brackets the true series") {
  // x = 1/j (l^2), y = 1/j^2 (l^2); true sum is zeta(3) ~ 1.2020569
  auto x = TruncatedSequence::generator("1/j", 2.0, 200);
  auto y = TruncatedSequence::generator("1/j^2", 2.0, 100);
  auto rep = holder_pairing(x, y, ConjugatePair::from_p(2.0));
  double zeta3 = 1.2020569031595943;
  CHECK(rep.prefix_sum <= zeta3);
  CHECK(zeta3 <= rep.prefix_sum + rep.tail_bound + 1e-12);
  CHECK(rep.prefix_sum + rep.tail_bound <= rep.bound + 1e-12);
}

TEST_CASE("exponent mismatches are rejected") {
  auto x = TruncatedSequence::finite(real_vector({1.0}), 2.0);
  auto y = TruncatedSequence::finite(real_vector({1.0}), 3.0);
  CHECK_THROWS_AS(holder_pairing(x, y, ConjugatePair::from_p(2.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(minkowski_verify(x, y), std::invalid_argument);
}

TEST_CASE("Minkowski: cancellation case x + (-x)") {
  Rng rng(5);
  Vec v = rng.gaussian_vector(16, true);
  auto x = TruncatedSequence::finite(v, 2.0);
  auto y = TruncatedSequence::finite(scale(Complex(-1.0, 0.0), v), 2.0);
  auto rep = minkowski_verify(x, y);
  CHECK(rep.lhs.upper == 0.0);
  CHECK(rep.rhs == Catch::Approx(2.0 * lp_norm(x).upper));
  CHECK(rep.pass);
}

TEST_CASE("Minkowski: disjoint supports at p = 1 give equality") {
  auto x = TruncatedSequence::finite(real_vector({1.0, 0.0}), 1.0);
  auto y = TruncatedSequence::finite(real_vector({0.0, 1.0}), 1.0);
  auto rep = minkowski_verify(x, y);
  CHECK(rep.lhs.upper == Catch::Approx(2.0));
  CHECK(rep.rhs == Catch::Approx(2.0));
  CHECK(rep.pass);
}

TEST_CASE("Minkowski fuzzing across exponents, mismatched prefix lengths") {
  Rng rng(777);
  for (double p : {1.0, 1.5, 2.0, 3.0, kInfExponent}) {
    for (int rep = 0; rep < 2000; ++rep) {
      std::size_t nx = 1 + rng.uniform_index(12);
      std::size_t ny = 1 + rng.uniform_index(12);
      auto x = TruncatedSequence::finite(rng.gaussian_vector(nx, true), p);
      auto y = TruncatedSequence::finite(rng.gaussian_vector(ny, true), p);
      auto r = minkowski_verify(x, y);
      if (!r.pass) {
        INFO("p = " << p << " rep = " << rep);
        REQUIRE(r.pass);
      }
    }
  }
}

TEST_CASE("dual_apply: coordinate functionals") {
  DualFunctional f{TruncatedSequence::finite({Complex(1.0, 0.0)}, 2.0)};
  auto x = TruncatedSequence::finite({Complex(1.0, 0.0)}, 2.0);
  auto r = dual_apply(f, x);
  CHECK(r.center == Complex(1.0, 0.0));
  CHECK(r.radius == 0.0);
}

TEST_CASE("dual_apply worked example: f=(3,4) on x=(3/5,4/5) gives 5") {
  DualFunctional f{TruncatedSequence::finite(real_vector({3.0, 4.0}), 2.0)};
  auto x = TruncatedSequence::finite(real_vector({0.6, 0.8}), 2.0);
  auto r = dual_apply(f, x);
  CHECK(r.center.real() == Catch::Approx(5.0).epsilon(1e-14));
  CHECK(r.radius == 0.0);
}

TEST_CASE("dual_apply radius is controlled by the tail certificates") {
  // f has tail 1e-3; x is a longer unit vector, so the unpaired part of x
  // meets f's tail bound
  DualFunctional f{TruncatedSequence::with_tail(real_vector({0.5, 0.5}), 2.0,
                                                1e-3)};
  Vec xv = zeros(8);
  xv[7] = 1.0;  // unit l^2 vector supported beyond f's prefix
  auto x = TruncatedSequence::finite(xv, 2.0);
  auto r = dual_apply(f, x);
  CHECK(r.radius <= 1e-3 + 1e-15);
  CHECK(r.radius > 0.0);
}

TEST_CASE("norming witness: f = (3,4), q = 2 recovers ratio 5") {
  DualFunctional f{TruncatedSequence::finite(real_vector({3.0, 4.0}), 2.0)};
  auto w = norming_witness(f, 2);
  CHECK(w.entries[0] == Complex(3.0, 0.0));
  CHECK(w.entries[1] == Complex(4.0, 0.0));
  CHECK(w.ratio == Catch::Approx(5.0).epsilon(1e-14));
  CHECK(w.achieved_ratio == Catch::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("norming witness: unit coordinate") {
  DualFunctional f{TruncatedSequence::finite({Complex(1.0, 0.0)}, 3.0)};
  auto w = norming_witness(f, 1);
  CHECK(std::abs(w.entries[0] - Complex(1.0, 0.0)) < 1e-15);
  CHECK(w.ratio == Catch::Approx(1.0));
}

TEST_CASE("norming witness cancels complex phases: f = (i)") {
  DualFunctional f{TruncatedSequence::finite({Complex(0.0, 1.0)}, 2.0)};
  auto w = norming_witness(f, 1);
  // beta_1 = e^{-i pi/2} = -i, and alpha_1 beta_1 = 1
  CHECK(w.entries[0].real() == Catch::Approx(0.0).margin(1e-15));
  CHECK(w.entries[0].imag() == Catch::Approx(-1.0).epsilon(1e-15));
  Complex paired = Complex(0.0, 1.0) * w.entries[0];
  CHECK(paired.real() == Catch::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(paired.imag()) <= 1e-15);
}

TEST_CASE("norming witness ratio equals the truncated q-norm on random f") {
  Rng rng(31);
  for (double q : {1.5, 2.0, 3.0}) {
    for (int rep = 0; rep < 50; ++rep) {
      std::size_t n = 1 + rng.uniform_index(40);
      DualFunctional f{TruncatedSequence::finite(rng.gaussian_vector(n, true), q)};
      auto w = norming_witness(f, n);
      Vec head = f.coeffs.prefix();
      double expect = pnorm(head, q);
      CHECK(std::abs(w.ratio - expect) <= 1e-10 * std::max(1.0, expect));
      CHECK(std::abs(w.achieved_ratio - expect) <= 1e-10 * std::max(1.0, expect));
    }
  }
}

TEST_CASE("norming witness rejects an all-zero prefix") {
  DualFunctional f{TruncatedSequence::finite(zeros(3), 2.0)};
  CHECK_THROWS_AS(norming_witness(f, 3), std::invalid_argument);
}

TEST_CASE("dual norm: coordinate functional is exactly 1") {
  DualFunctional f{TruncatedSequence::finite({Complex(1.0, 0.0)}, 2.0)};
  auto rep = dual_norm(f, 1, 100, 3);
  CHECK(rep.upper == Catch::Approx(1.0));
  CHECK(rep.lower == Catch::Approx(1.0));
  CHECK(rep.gap <= 1e-12);
}

TEST_CASE("dual norm: witness attains the bound for f = (3,4)") {
  DualFunctional f{TruncatedSequence::finite(real_vector({3.0, 4.0}), 2.0)};
  auto rep = dual_norm(f, 2, 500, 5);
  CHECK(rep.upper == Catch::Approx(5.0).margin(1e-10));
  CHECK(rep.lower == Catch::Approx(5.0).margin(1e-10));
}

TEST_CASE("dual norm gap is bounded by the tail for f = 1/j^2") {
  DualFunctional f{TruncatedSequence::generator("1/j^2", 2.0, 64)};
  auto rep = dual_norm(f, 64, 2000, 7);
  CHECK(rep.gap <= 1e-2);
  CHECK(rep.lower <= rep.upper);
}

TEST_CASE("cauchy family x_m = (1, 1/2, ..., 1/m) converges to 1/j") {
  std::vector<TruncatedSequence> family;
  std::vector<double> eps;
  for (std::size_t m = 1; m <= 100; ++m) {
    Vec prefix(m);
    for (std::size_t j = 0; j < m; ++j)
      prefix[j] = Complex(1.0 / static_cast<double>(j + 1), 0.0);
    family.push_back(TruncatedSequence::finite(prefix, 2.0));
    eps.push_back(1.0 / std::sqrt(static_cast<double>(m)));
  }
  auto rep = cauchy_limit(family, eps);
  REQUIRE(rep.cauchy_ok);
  CHECK(rep.converged);
  for (std::size_t j = 0; j < rep.limit.size(); ++j)
    CHECK(rep.limit[j].real() ==
          Catch::Approx(1.0 / static_cast<double>(j + 1)));
  // distances obey the schedule
  for (std::size_t m = 0; m < family.size(); ++m)
    CHECK(rep.distances[m] <= eps[m] + 1e-10);
}

TEST_CASE("constant family converges with zero distances") {
  Vec v = real_vector({0.5, 0.25});
  std::vector<TruncatedSequence> family(5, TruncatedSequence::finite(v, 2.0));
  std::vector<double> eps = {1.0, 0.5, 0.25, 0.125, 0.0625};
  auto rep = cauchy_limit(family, eps);
  CHECK(rep.cauchy_ok);
  CHECK(rep.converged);
  for (double d : rep.distances) CHECK(d == 0.0);
}

TEST_CASE("alternating family is rejected with the offending pair") {
  std::vector<TruncatedSequence> family;
  for (int i = 0; i < 4; ++i)
    family.push_back(TruncatedSequence::finite(
        {Complex(i % 2 ? 1.0 : -1.0, 0.0)}, 2.0));
  std::vector<double> eps = {0.5, 0.4, 0.3, 0.2};
  auto rep = cauchy_limit(family, eps);
  CHECK_FALSE(rep.cauchy_ok);
  CHECK(rep.violating_distance == Catch::Approx(2.0));
  CHECK(rep.violating_pair.first < rep.violating_pair.second);
}

TEST_CASE("a thinned subsequence has the same limit") {
  std::vector<TruncatedSequence> family;
  std::vector<double> eps;
  for (std::size_t m = 1; m <= 60; ++m) {
    Vec prefix(m);
    for (std::size_t j = 0; j < m; ++j)
      prefix[j] = Complex(1.0 / static_cast<double>(j + 1), 0.0);
    family.push_back(TruncatedSequence::finite(prefix, 2.0));
    eps.push_back(1.0 / std::sqrt(static_cast<double>(m)));
  }
  std::vector<TruncatedSequence> thin;
  std::vector<double> thin_eps;
  for (std::size_t m = 0; m < family.size(); m += 4) {
    thin.push_back(family[m]);
    thin_eps.push_back(eps[m]);
  }
  auto full = cauchy_limit(family, eps);
  auto sub = cauchy_limit(thin, thin_eps);
  REQUIRE(full.converged);
  REQUIRE(sub.converged);
  for (std::size_t j = 0; j < sub.limit.size(); ++j)
    CHECK(std::abs(full.limit[j] - sub.limit[j]) <= 1e-15);
}
