// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "normkit/norms.hpp"

using namespace normkit;

TEST_CASE("p-norm closed forms") {
  NormSpec l2 = NormSpec::p_norm(2.0, 2);
  CHECK(l2(real_vector({3.0, 4.0})) == 5.0);

  NormSpec linf = NormSpec::p_norm(kInfExponent, 3);
  CHECK(linf(real_vector({1.0, -7.0, 3.0})) == 7.0);

  NormSpec l1 = NormSpec::p_norm(1.0, 3);
  CHECK(l1(real_vector({1.0, -2.0, 3.0})) == 6.0);

  // complex moduli
  Vec z = {Complex(3.0, 4.0)};
  CHECK(NormSpec::p_norm(2.0, 1)(z) == 5.0);
}

TEST_CASE("basis-zero norm with the standard basis takes the max modulus") {
  NormSpec zero = NormSpec::zero_norm_standard(3);
  CHECK(zero(real_vector({2.0, -5.0, 1.0})) == Catch::Approx(5.0).margin(1e-14));
}

TEST_CASE("general exponent evaluation is stable under scaling") {
  NormSpec l3 = NormSpec::p_norm(3.0, 2);
  Vec big = real_vector({3e200, 4e200});
  double expect = std::pow(std::pow(3.0, 3) + std::pow(4.0, 3), 1.0 / 3.0);
  CHECK(l3(big) == Catch::Approx(3e200 * expect / 3.0).epsilon(1e-12));
  CHECK(std::isfinite(l3(big)));
  // homogeneity across 180 orders of magnitude
  Vec small = real_vector({3e-20, 4e-20});
  CHECK(l3(small) == Catch::Approx(1e-20 * expect).epsilon(1e-12));
}

TEST_CASE("eval_norm rejects dimension mismatch and p below 1") {
  NormSpec l2 = NormSpec::p_norm(2.0, 2);
  CHECK_THROWS_AS(l2(real_vector({1.0, 2.0, 3.0})), std::invalid_argument);
  CHECK_THROWS_AS(NormSpec::p_norm(0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(NormSpec::p_norm(2.0, 0), std::invalid_argument);
}

TEST_CASE("axiom fuzzing passes for p-norms and the zero norm") {
  for (double p : {1.0, 1.5, 2.0, 3.0, kInfExponent}) {
    auto rep = check_norm_axioms(NormSpec::p_norm(p, 3), 1000, 7);
    INFO("p = " << p);
    CHECK(rep.all_pass());
  }
  auto rep = check_norm_axioms(NormSpec::zero_norm_standard(4), 1000, 7);
  CHECK(rep.all_pass());
}

TEST_CASE("a signed functional fails nonnegativity with a counterexample") {
  NormSpec bad = NormSpec::custom("first-coordinate", 3,
                                  [](const Vec& x) { return x[0].real(); });
  auto rep = check_norm_axioms(bad, 1000, 3);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.nonnegativity);
  REQUIRE_FALSE(rep.counterexamples.empty());
  bool found = false;
  for (const auto& ce : rep.counterexamples)
    if (ce.axiom == "nonnegativity" && bad(ce.x) < 0.0) found = true;
  CHECK(found);
}

TEST_CASE("the half-power functional fails the triangle inequality") {
  NormSpec bad = NormSpec::custom("half-power", 2, [](const Vec& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::sqrt(std::abs(v));
    return s * s;
  });
  // hand witness: ||e1 + e2|| = 4 > 2 = ||e1|| + ||e2||
  CHECK(bad(real_vector({1.0, 1.0})) == Catch::Approx(4.0));
  auto rep = check_norm_axioms(bad, 1000, 11);
  CHECK_FALSE(rep.triangle);
}

TEST_CASE("reverse triangle holds for sampled pairs") {
  Rng rng(99);
  NormSpec norm = NormSpec::p_norm(1.5, 4);
  for (int i = 0; i < 500; ++i) {
    Vec x = rng.gaussian_vector(4, true);
    Vec y = rng.gaussian_vector(4, true);
    double nx = norm(x), ny = norm(y);
    for (const Vec& z : {add(x, y), sub(x, y)}) {
      double nz = norm(z);
      CHECK(nz >= std::abs(nx - ny) - 1e-12 * std::max(1.0, nz));
      CHECK(nz <= nx + ny + 1e-12 * std::max(1.0, nx + ny));
    }
  }
}

TEST_CASE("zero norm coordinates invert the basis") {
  std::vector<Vec> basis = {real_vector({1.0, 0.0}), real_vector({1.0, 1.0})};
  NormSpec zero = NormSpec::zero_norm(basis);
  Vec alpha = zero.coordinates(real_vector({0.0, 1.0}));
  CHECK(alpha[0].real() == Catch::Approx(-1.0).margin(1e-14));
  CHECK(alpha[1].real() == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("singular basis is rejected") {
  std::vector<Vec> bad = {real_vector({1.0, 2.0}), real_vector({2.0, 4.0})};
  CHECK_THROWS_AS(NormSpec::zero_norm(bad), std::invalid_argument);
}

TEST_CASE("conjugate-exponent dual is marked and involutive on p") {
  NormSpec l3 = NormSpec::p_norm(3.0, 4);
  NormSpec d = l3.dual();
  CHECK(d.exponent() == Catch::Approx(1.5));
  CHECK(d.marked_dual());
  CHECK(d.dual_primal().exponent() == 3.0);
  CHECK(NormSpec::p_norm(1.0, 2).dual().exponent() == kInfExponent);
  CHECK(NormSpec::p_norm(kInfExponent, 2).dual().exponent() == 1.0);
}
