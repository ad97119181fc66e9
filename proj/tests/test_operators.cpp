// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "normkit/operators.hpp"
#include "normkit/oracles.hpp"

using namespace normkit;

namespace {

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m(0, 0) = a; m(0, 1) = b;
  m(1, 0) = c; m(1, 1) = d;
  return m;
}

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, bool cx = true) {
  Matrix m(r, c);
  for (auto& v : m.a) v = cx ? rng.normal_complex() : Complex(rng.normal(), 0);
  return m;
}

}  // namespace

TEST_CASE("identity has operator norm 1 for any matching p-norm pair") {
  for (double p : {1.0, 2.0, 3.0, kInfExponent}) {
    LinearOperator op(Matrix::identity(3), NormSpec::p_norm(p, 3),
                      NormSpec::p_norm(p, 3));
    auto r = operator_norm(op, 1e-9);
    INFO("p = " << p);
    CHECK(r.value == Catch::Approx(1.0).margin(1e-9));
    CHECK(op.source(r.witness) == Catch::Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("1 -> 1 norm is the max column sum") {
  LinearOperator op(mat2(1, 2, 3, 4), NormSpec::p_norm(1.0, 2),
                    NormSpec::p_norm(1.0, 2));
  auto r = operator_norm(op, 1e-9);
  CHECK(r.value == 6.0);
  CHECK(r.method == OpNormMethod::ClosedForm);
  // cross-check by sphere sampling: nothing sampled may beat the closed form
  CHECK(r.sup_sphere <= 6.0 * (1.0 + 1e-12));
  CHECK(r.certified_lower >= 6.0 * (1.0 - 1e-12));
}

TEST_CASE("inf -> inf norm is the max row sum") {
  LinearOperator op(mat2(1, -2, 3, 4), NormSpec::p_norm(kInfExponent, 2),
                    NormSpec::p_norm(kInfExponent, 2));
  auto r = operator_norm(op, 1e-9);
  CHECK(r.value == Catch::Approx(7.0).margin(1e-12));
  CHECK(r.method == OpNormMethod::ClosedForm);
}

TEST_CASE("2 -> 2 norm of a diagonal matrix is the top singular value") {
  Matrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  LinearOperator op(d, NormSpec::p_norm(2.0, 2), NormSpec::p_norm(2.0, 2));
  auto r = operator_norm(op, 1e-10);
  CHECK(r.value == Catch::Approx(3.0).epsilon(1e-10));
  CHECK(r.method == OpNormMethod::PowerIteration);
  CHECK(r.certified_lower == Catch::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("power iteration matches the Jacobi SVD oracle") {
  Rng rng(2024);
  double worst = 0.0;
  for (int rep = 0; rep < 25; ++rep) {
    std::size_t n = 2 + rng.uniform_index(31);
    std::size_t m = 2 + rng.uniform_index(31);
    Matrix a = random_matrix(rng, m, n, rep % 2 == 0);
    LinearOperator op(a, NormSpec::p_norm(2.0, n), NormSpec::p_norm(2.0, m));
    double v = operator_norm(op, 1e-10, 1000 + rep).value;
    double sv = oracle_svd_sigma_max(a);
    worst = std::max(worst, std::abs(v - sv) / sv);
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("general norm pairs: ascent stays consistent with sampling") {
  Rng rng(55);
  for (int rep = 0; rep < 4; ++rep) {
    Matrix a = random_matrix(rng, 3, 4);
    LinearOperator op(a, NormSpec::p_norm(3.0, 4), NormSpec::p_norm(1.5, 3));
    auto r = operator_norm(op, 1e-8, rep);
    CHECK(r.value >= r.certified_lower * (1.0 - 1e-12));
    CHECK(r.sup_sphere <= r.value * (1.0 + 1e-9));
    auto cert = continuity_certificate(op, 5000, rep);
    CHECK(cert.certified());
  }
}

TEST_CASE("the three sup variants agree within tol") {
  Rng rng(77);
  Matrix a = random_matrix(rng, 4, 4);
  double tol = 1e-8;
  LinearOperator op(a, NormSpec::p_norm(2.0, 4), NormSpec::p_norm(2.0, 4));
  auto r = operator_norm(op, tol);
  CHECK(r.sup_ball == Catch::Approx(r.sup_sphere).epsilon(tol));
  CHECK(r.sup_open == Catch::Approx((1.0 - tol) * r.sup_sphere).margin(1e-15));
  CHECK(r.sup_sphere - r.sup_open <= tol * r.sup_sphere + 1e-15);
}

TEST_CASE("zero operator: norm 0 and the continuity convention") {
  Matrix z(3, 3);
  LinearOperator op(z, NormSpec::p_norm(2.0, 3), NormSpec::p_norm(2.0, 3));
  auto r = operator_norm(op, 1e-9);
  CHECK(r.value == 0.0);
  auto cert = continuity_certificate(op, 1000, 5);
  CHECK(cert.bound_M == 0.0);
  CHECK(cert.certified());  // ||0 x|| = 0 <= M ||x|| holds with M = 0
}

TEST_CASE("identity continuity certificate: M = 1, no violations") {
  LinearOperator op(Matrix::identity(4), NormSpec::p_norm(2.0, 4),
                    NormSpec::p_norm(2.0, 4));
  auto cert = continuity_certificate(op, 10000, 3);
  CHECK(cert.bound_M == Catch::Approx(1.0).margin(1e-9));
  CHECK(cert.certified());
}

TEST_CASE("random 5x5 bound certificate holds on 10^4 samples") {
  Rng rng(31337);
  Matrix a = random_matrix(rng, 5, 5);
  LinearOperator op(a, NormSpec::p_norm(2.0, 5), NormSpec::p_norm(2.0, 5));
  auto cert = continuity_certificate(op, 10000, 8);
  CHECK(cert.certified());
}

TEST_CASE("permutation matrices are isometries for every p-norm") {
  Matrix perm(3, 3);
  perm(0, 1) = 1.0;
  perm(1, 2) = 1.0;
  perm(2, 0) = 1.0;
  for (double p : {1.0, 2.0, kInfExponent}) {
    LinearOperator op(perm, NormSpec::p_norm(p, 3), NormSpec::p_norm(p, 3));
    auto rep = isometry_test(op, 500, 4);
    INFO("p = " << p);
    CHECK(rep.isometric());
    REQUIRE(rep.operator_norm_value.has_value());
    CHECK(*rep.operator_norm_value == Catch::Approx(1.0).margin(1e-8));
  }
}

TEST_CASE("diag(2,1) is not an isometry and yields a counterexample") {
  Matrix d = mat2(2, 0, 0, 1);
  LinearOperator op(d, NormSpec::p_norm(2.0, 2), NormSpec::p_norm(2.0, 2));
  auto rep = isometry_test(op, 500, 4);
  CHECK_FALSE(rep.isometric());
  REQUIRE(rep.counterexample.has_value());
  Vec ce = *rep.counterexample;
  CHECK(std::abs(op.target(op.apply(ce)) - op.source(ce)) > 1e-10);
  // the canonical witness e1 fails too
  Vec e1 = unit_vector(2, 0);
  CHECK(op.target(op.apply(e1)) == 2.0);
}

TEST_CASE("rotation by 0.7 rad: distance preservation and orthogonality") {
  double th = 0.7;
  Matrix rot = mat2(std::cos(th), -std::sin(th), std::sin(th), std::cos(th));
  // independent oracle: R^T R = I
  Matrix gram = matmul(rot.transpose(), rot);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)) < 1e-15);
  LinearOperator op(rot, NormSpec::p_norm(2.0, 2), NormSpec::p_norm(2.0, 2));
  auto rep = isometry_test(op, 1000, 12);
  CHECK(rep.isometric());
  CHECK(rep.distance_preserving);
  CHECK(rep.max_norm_deviation <= 1e-10);
}

TEST_CASE("operator norm is subadditive and homogeneous on random pairs") {
  Rng rng(9);
  double tol = 1e-8;
  for (int rep = 0; rep < 5; ++rep) {
    Matrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    Matrix sum(3, 3);
    for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] = a.a[i] + b.a[i];
    NormSpec s = NormSpec::p_norm(1.0, 3), t = NormSpec::p_norm(2.0, 3);
    double na = operator_norm(LinearOperator(a, s, t), tol).value;
    double nb = operator_norm(LinearOperator(b, s, t), tol).value;
    double ns = operator_norm(LinearOperator(sum, s, t), tol).value;
    CHECK(ns <= na + nb + tol * (na + nb));
    Complex alpha = rng.normal_complex();
    Matrix am(3, 3);
    for (std::size_t i = 0; i < am.a.size(); ++i) am.a[i] = alpha * a.a[i];
    double nam = operator_norm(LinearOperator(am, s, t), tol).value;
    CHECK(nam == Catch::Approx(std::abs(alpha) * na).epsilon(1e-9));
  }
}

TEST_CASE("dimension mismatches are rejected at construction") {
  CHECK_THROWS_AS(LinearOperator(Matrix::identity(3), NormSpec::p_norm(2.0, 2),
                                 NormSpec::p_norm(2.0, 3)),
                  std::invalid_argument);
}
