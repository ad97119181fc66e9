// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "normkit/fixtures.hpp"
#include "normkit/operators.hpp"
#include "normkit/oracles.hpp"

using namespace normkit;

TEST_CASE("SVD oracle on trivial matrices") {
  Matrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  CHECK(oracle_svd_sigma_max(d) == Catch::Approx(3.0).epsilon(1e-13));
  CHECK(oracle_svd_sigma_max(Matrix::identity(6)) ==
        Catch::Approx(1.0).epsilon(1e-13));
  Matrix z(3, 4);
  CHECK(oracle_svd_sigma_max(z) == 0.0);
}

TEST_CASE("SVD oracle handles complex matrices via the real embedding") {
  // [[0, i], [i, 0]] is unitary: sigma_max = 1
  Matrix u(2, 2);
  u(0, 1) = Complex(0.0, 1.0);
  u(1, 0) = Complex(0.0, 1.0);
  CHECK(oracle_svd_sigma_max(u) == Catch::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("SVD oracle rejects non-finite entries") {
  Matrix m(1, 1);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(oracle_svd_sigma_max(m), std::invalid_argument);
}

TEST_CASE("SVD oracle agrees with the power-iteration path on random input") {
  Rng rng(271828);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix a(8, 8);
    for (auto& v : a.a) v = rng.normal_complex();
    LinearOperator op(a, NormSpec::p_norm(2.0, 8), NormSpec::p_norm(2.0, 8));
    double pi = operator_norm(op, 1e-10, rep).value;
    double sv = oracle_svd_sigma_max(a);
    CHECK(std::abs(pi - sv) <= 1e-8 * sv);
  }
}

TEST_CASE("grid oracle: min of ||x||_2 over the max|a_i| = 1 faces in R^2") {
  // parametrize the face x = (s, t), s = +-1, t in [-1, 1]
  auto face = [](const RealVec& t) {
    return std::sqrt(1.0 + t[0] * t[0]);
  };
  auto g = oracle_grid_extremum(face, {-1.0}, {1.0}, 1024, false);
  CHECK(g.value == Catch::Approx(1.0).margin(1e-9));
  CHECK(std::abs(g.arg[0]) <= 1e-9);
}

TEST_CASE("grid oracle on a constant objective returns the constant") {
  auto g = oracle_grid_extremum([](const RealVec&) { return 4.25; },
                                {0.0, 0.0}, {1.0, 1.0}, 8, true);
  CHECK(g.value == 4.25);
}

TEST_CASE("grid oracle: maximize -t - max(|t|, 1) over [-8, 8] gives 0") {
  auto g = oracle_grid_extremum(
      [](const RealVec& t) { return -t[0] - std::max(std::abs(t[0]), 1.0); },
      {-8.0}, {8.0}, 2048, true);
  CHECK(g.value == Catch::Approx(0.0).margin(1e-12));
  CHECK(g.arg[0] <= -1.0 + 1e-9);
}

TEST_CASE("doubling the grid resolution never worsens the extremum") {
  auto obj = [](const RealVec& x) {
    return std::sin(5.0 * x[0]) * std::cos(3.0 * x[1]) + 0.2 * x[0];
  };
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t res = 4; res <= 256; res *= 2) {
    auto g = oracle_grid_extremum(obj, {-2.0, -2.0}, {2.0, 2.0}, res, false);
    CHECK(g.value <= prev + 1e-15);
    prev = g.value;
  }
}

TEST_CASE("grid oracle guards dimension and resolution") {
  RealVec lo(5, 0.0), hi(5, 1.0);
  CHECK_THROWS_AS(
      oracle_grid_extremum([](const RealVec&) { return 0.0; }, lo, hi, 4),
      std::invalid_argument);
  CHECK_THROWS_AS(oracle_grid_extremum([](const RealVec&) { return 0.0; },
                                       {0.0}, {1.0}, 1),
                  std::invalid_argument);
}

// ---- serialization ----

TEST_CASE("norm specs round-trip through JSON") {
  for (double p : {1.0, 2.5, kInfExponent}) {
    NormSpec n = NormSpec::p_norm(p, 4);
    NormSpec back = norm_from_json(to_json(n));
    CHECK(back.kind() == NormSpec::Kind::P);
    CHECK(back.exponent() == p);
    CHECK(back.dim() == 4);
  }
  NormSpec z = NormSpec::zero_norm({real_vector({1.0, 0.0}),
                                    real_vector({1.0, 1.0})});
  NormSpec zback = norm_from_json(to_json(z));
  Vec probe = real_vector({0.3, -0.8});
  CHECK(zback(probe) == z(probe));
}

TEST_CASE("vectors serialize as [re, im] pairs and accept bare reals") {
  Vec v = {Complex(1.5, -2.0), Complex(0.0, 3.0)};
  json j = to_json(v);
  CHECK(j[0][0] == 1.5);
  CHECK(j[0][1] == -2.0);
  CHECK(vec_from_json(j) == v);
  CHECK(vec_from_json(json::parse("[1.0, 2.0]")) == real_vector({1.0, 2.0}));
}

TEST_CASE("operators round-trip and default to l2 norms") {
  json j = json::parse(R"({"matrix": [[1, 2], [3, 4]]})");
  LinearOperator op = operator_from_json(j);
  CHECK(op.source.exponent() == 2.0);
  CHECK(op.matrix(1, 0) == Complex(3.0, 0.0));
  LinearOperator back = operator_from_json(to_json(op));
  CHECK(back.matrix.a == op.matrix.a);
}

TEST_CASE("sequences parse prefixes, tails, and generators") {
  json j = json::parse(R"({"p": 2, "prefix": [[3,0],[4,0]], "tail_bound": 0})");
  auto s = sequence_from_json(j);
  CHECK(lp_norm(s).upper == 5.0);
  json g = json::parse(R"({"p": 2, "generator": "1/j", "terms": 100})");
  auto sg = sequence_from_json(g);
  CHECK(sg.length() == 100);
  CHECK(sg.tail_bound() == Catch::Approx(0.1).epsilon(1e-12));
  json inf = json::parse(R"({"p": "inf", "prefix": [[1,0],[ -7,0],[3,0]]})");
  CHECK(lp_norm(sequence_from_json(inf)).upper == 7.0);
}

TEST_CASE("sparse functions round-trip with canonical key order") {
  FiniteSupportFunction f;
  f.set("10", Complex(1.0, 2.0));
  f.set("2", Complex(-1.0, 0.0));
  json j = to_json(f);
  auto back = sparse_from_json(j);
  CHECK(back.at("10") == Complex(1.0, 2.0));
  CHECK(back.at("2") == Complex(-1.0, 0.0));
  CHECK(back.support_size() == 2);
}

TEST_CASE("reports serialize with sorted keys and pass/fail invariant") {
  Report r;
  r.kind = "demo";
  r.values["beta"] = 2.0;
  r.values["alpha"] = 1.0;
  r.fail("because");
  json j = to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["notes"].size() == 1);
  std::string dumped = j.dump();
  CHECK(dumped.find("alpha") < dumped.find("beta"));
}

TEST_CASE("named custom evaluators exist and unknown names are rejected") {
  CHECK_NOTHROW(named_custom_evaluator("half-power"));
  CHECK_NOTHROW(named_custom_evaluator("first-coordinate"));
  CHECK_NOTHROW(named_custom_evaluator("twice-l2"));
  CHECK_THROWS_AS(named_custom_evaluator("no-such"), parse_error);
  // twice-l2 is a genuine norm
  auto rep = check_norm_axioms(
      NormSpec::custom("twice-l2", 3, named_custom_evaluator("twice-l2")),
      500, 2);
  CHECK(rep.all_pass());
}
