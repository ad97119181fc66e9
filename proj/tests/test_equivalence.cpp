// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "normkit/equivalence.hpp"
#include "normkit/oracles.hpp"

using namespace normkit;

namespace {

std::vector<Vec> standard_basis(std::size_t n) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(n, i));
  return b;
}

// brute-force a: minimize the norm over the faces max|alpha_i| = 1 (real)
double grid_oracle_a(const std::vector<Vec>& basis, const NormSpec& norm,
                     std::size_t resolution) {
  const std::size_t n = basis.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t fixed = 0; fixed < n; ++fixed) {
    for (double sign : {1.0, -1.0}) {
      auto objective = [&](const RealVec& free_coords) {
        Vec x = scale(Complex(sign, 0.0), basis[fixed]);
        std::size_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == fixed) continue;
          x = axpy(Complex(free_coords[t++], 0.0), basis[i], x);
        }
        return norm(x);
      };
      if (n == 1) {
        best = std::min(best, objective({}));
        continue;
      }
      RealVec lo(n - 1, -1.0), hi(n - 1, 1.0);
      best = std::min(best,
                      oracle_grid_extremum(objective, lo, hi, resolution).value);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("basis-zero norm worked examples") {
  CHECK(basis_zero_norm(standard_basis(3), real_vector({2.0, -5.0, 1.0})) ==
        Catch::Approx(5.0).margin(1e-14));
  // coordinates of (0,1) in {(1,0),(1,1)} are (-1, 1)
  std::vector<Vec> skew = {real_vector({1.0, 0.0}), real_vector({1.0, 1.0})};
  CHECK(basis_zero_norm(skew, real_vector({0.0, 1.0})) ==
        Catch::Approx(1.0).margin(1e-14));
  // the first basis vector always has coordinates (1, 0, ..., 0)
  CHECK(basis_zero_norm(skew, skew[0]) == Catch::Approx(1.0).margin(1e-14));
  std::vector<Vec> bad = {real_vector({1.0, 1.0}), real_vector({2.0, 2.0})};
  CHECK_THROWS_AS(basis_zero_norm(bad, real_vector({1.0, 0.0})),
                  std::invalid_argument);
}

TEST_CASE("standard basis of R^2 with the Euclidean norm: a = 1, b = 2") {
  auto eq = equivalence_constants(standard_basis(2), NormSpec::p_norm(2.0, 2),
                                  1e-8, false, 1);
  CHECK(eq.b == 2.0);
  CHECK(eq.a == Catch::Approx(1.0).margin(1e-6));
  // witness sits on the ||.||_0 unit sphere and attains ~a
  NormSpec zero = NormSpec::zero_norm(eq.basis);
  CHECK(zero(eq.a_witness) == Catch::Approx(1.0).margin(1e-9));
  CHECK(NormSpec::p_norm(2.0, 2)(eq.a_witness) ==
        Catch::Approx(eq.a).margin(1e-9));
}

TEST_CASE("norm equal to the zero norm gives a = b = 1") {
  std::vector<Vec> basis = standard_basis(3);
  auto eq = equivalence_constants(basis, NormSpec::zero_norm(basis), 1e-8,
                                  false, 2);
  CHECK(eq.b == 3.0);  // sum of unit basis-vector zero-norms... each is 1
  CHECK(eq.a == Catch::Approx(1.0).margin(1e-7));
  // with the same norm on both sides the sandwich is 1*||x||_0 <= ||x||_0
  auto chk = check_equivalence_sandwich(eq, NormSpec::zero_norm(basis), 2000, 3);
  CHECK(chk.pass);
}

TEST_CASE("standard basis of R^2 with the l1 norm: a = 1, b = 2") {
  auto eq = equivalence_constants(standard_basis(2), NormSpec::p_norm(1.0, 2),
                                  1e-8, false, 3);
  CHECK(eq.b == 2.0);
  CHECK(eq.a == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("b equals the sum of basis-vector norms exactly") {
  Rng rng(41);
  for (int rep = 0; rep < 3; ++rep) {
    std::size_t n = 2 + rep;
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) {
      Vec b = rng.gaussian_vector(n, false);
      b[i] += Complex(3.0, 0.0);
      basis.push_back(b);
    }
    NormSpec norm = NormSpec::p_norm(1.5, n);
    auto eq = equivalence_constants(basis, norm, 1e-6, false, rep);
    double expect = 0.0;
    for (const auto& b : basis) expect += norm(b);
    CHECK(eq.b == expect);
    CHECK(eq.a > 0.0);
    CHECK(eq.a <= eq.b);
  }
}

TEST_CASE("sandwich holds on 10^4 random vectors") {
  Rng rng(4242);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec b = rng.gaussian_vector(3, false);
    b[i] += Complex(2.5, 0.0);
    basis.push_back(b);
  }
  NormSpec norm = NormSpec::p_norm(kInfExponent, 3);
  auto eq = equivalence_constants(basis, norm, 1e-7, false, 7);
  auto chk = check_equivalence_sandwich(eq, norm, 10000, 7);
  CHECK(chk.pass);
  CHECK(chk.worst_lower_slack <= 0.0 + 1e-9);
}

TEST_CASE("complex mode also certifies against complex samples") {
  std::vector<Vec> basis = standard_basis(2);
  NormSpec norm = NormSpec::p_norm(2.0, 2);
  auto eq = equivalence_constants(basis, norm, 1e-6, true, 11);
  CHECK(eq.a == Catch::Approx(1.0).margin(1e-4));
  auto chk = check_equivalence_sandwich(eq, norm, 5000, 11);
  CHECK(chk.pass);
}

TEST_CASE("a agrees with the brute-force grid oracle in dims 2 and 3") {
  std::vector<Vec> skew2 = {real_vector({1.0, 0.2}), real_vector({-0.3, 1.1})};
  for (double p : {1.0, 2.0, kInfExponent}) {
    NormSpec norm = NormSpec::p_norm(p, 2);
    auto eq = equivalence_constants(skew2, norm, 1e-8, false, 13);
    double oracle = grid_oracle_a(skew2, norm, 512);
    INFO("p = " << p);
    CHECK(std::abs(eq.a - oracle) <= 1e-3);
    CHECK(eq.a <= oracle + 1e-9);  // descent refines the grid value
  }
  std::vector<Vec> skew3 = {real_vector({1.0, 0.1, 0.0}),
                            real_vector({0.0, 1.0, -0.2}),
                            real_vector({0.3, 0.0, 1.0})};
  NormSpec norm = NormSpec::p_norm(2.0, 3);
  auto eq = equivalence_constants(skew3, norm, 1e-7, false, 17);
  double oracle = grid_oracle_a(skew3, norm, 96);
  CHECK(std::abs(eq.a - oracle) <= 1e-3);
}

TEST_CASE("scaling the basis rescales the sandwich consistently") {
  std::vector<Vec> basis = {real_vector({1.0, 0.4}), real_vector({0.0, 2.0})};
  NormSpec norm = NormSpec::p_norm(2.0, 2);
  auto eq = equivalence_constants(basis, norm, 1e-7, false, 19);
  std::vector<Vec> scaled;
  for (const auto& b : basis) scaled.push_back(scale(Complex(3.0, 0.0), b));
  auto eq2 = equivalence_constants(scaled, norm, 1e-7, false, 19);
  // ||x||_0 coordinates shrink by 1/3, so both constants grow by 3
  CHECK(eq2.b == Catch::Approx(3.0 * eq.b).epsilon(1e-12));
  CHECK(eq2.a == Catch::Approx(3.0 * eq.a).epsilon(1e-5));
  auto chk = check_equivalence_sandwich(eq2, norm, 5000, 23);
  CHECK(chk.pass);
}

TEST_CASE("degenerate norms are reported as invalid") {
  std::vector<Vec> basis = standard_basis(2);
  NormSpec bad = NormSpec::custom("first-coordinate-abs", 2, [](const Vec& x) {
    return std::abs(x[0]);
  });
  CHECK_THROWS_AS(equivalence_constants(basis, bad, 1e-7, false, 29),
                  invalid_norm_error);
}
