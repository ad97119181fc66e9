// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_FIXTURES_HPP
#define NORMKIT_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "normkit/bilinear.hpp"
#include "normkit/hahn_banach.hpp"
#include "normkit/lp.hpp"
#include "normkit/norms.hpp"
#include "normkit/operators.hpp"
#include "normkit/report.hpp"
#include "normkit/tensor.hpp"

namespace normkit {

using json = nlohmann::json;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- scalars and vectors: coordinates serialize as [re, im] pairs ----

inline json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw parse_error("expected a number or [re, im] pair");
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

inline Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("expected a coordinate array");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(complex_from_json(e));
  if (v.empty()) throw parse_error("empty vector");
  return v;
}

// ---- norms: {"kind":"p"|"zero"|"custom", "p":число|"inf", "dim":n} ----

inline std::function<double(const Vec&)> named_custom_evaluator(
    const std::string& name) {
  if (name == "first-coordinate")
    return [](const Vec& x) { return x.at(0).real(); };
  if (name == "half-power")  // p = 1/2 functional; breaks the triangle axiom
    return [](const Vec& x) {
      double s = 0.0;
      for (const auto& v : x) s += std::sqrt(std::abs(v));
      return s * s;
    };
  if (name == "twice-l2")
    return [](const Vec& x) { return 2.0 * norm2(x); };
  throw parse_error("unknown custom norm: " + name);
}

inline json to_json(const NormSpec& n) {
  json j;
  switch (n.kind()) {
    case NormSpec::Kind::P:
      j["kind"] = "p";
      if (n.exponent() == kInfExponent)
        j["p"] = "inf";
      else
        j["p"] = n.exponent();
      break;
    case NormSpec::Kind::Zero: {
      j["kind"] = "zero";
      json basis = json::array();
      for (const auto& b : n.basis()) basis.push_back(to_json(b));
      j["basis"] = basis;
      break;
    }
    case NormSpec::Kind::Custom:
      j["kind"] = "custom";
      j["name"] = n.name();
      break;
  }
  j["dim"] = n.dim();
  return j;
}

inline NormSpec norm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw parse_error("norm spec needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  std::size_t dim = j.value("dim", std::size_t{0});
  if (kind == "p") {
    double p;
    const json& pj = j.at("p");
    if (pj.is_string()) {
      if (pj.get<std::string>() != "inf") throw parse_error("bad exponent");
      p = kInfExponent;
    } else {
      p = pj.get<double>();
    }
    if (dim == 0) throw parse_error("p-norm needs a dim");
    return NormSpec::p_norm(p, dim);
  }
  if (kind == "zero") {
    if (j.contains("basis")) {
      std::vector<Vec> basis;
      for (const auto& b : j.at("basis")) basis.push_back(vec_from_json(b));
      return NormSpec::zero_norm(std::move(basis));
    }
    if (dim == 0) throw parse_error("zero norm needs a dim or basis");
    return NormSpec::zero_norm_standard(dim);
  }
  if (kind == "custom") {
    if (dim == 0) throw parse_error("custom norm needs a dim");
    std::string name = j.at("name").get<std::string>();
    return NormSpec::custom(name, dim, named_custom_evaluator(name));
  }
  throw parse_error("unknown norm kind: " + kind);
}

// ---- operators: {"matrix":[[...]], "source":..., "target":...} ----

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("expected a matrix");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return Matrix::from_rows(rows);
}

inline json to_json(const LinearOperator& op) {
  return json{{"matrix", to_json(op.matrix)},
              {"source", to_json(op.source)},
              {"target", to_json(op.target)}};
}

inline LinearOperator operator_from_json(const json& j) {
  Matrix m = matrix_from_json(j.at("matrix"));
  NormSpec src = j.contains("source") ? norm_from_json(j.at("source"))
                                      : NormSpec::p_norm(2.0, m.cols);
  NormSpec tgt = j.contains("target") ? norm_from_json(j.at("target"))
                                      : NormSpec::p_norm(2.0, m.rows);
  return LinearOperator(std::move(m), std::move(src), std::move(tgt));
}

// ---- sequences: {"p":..., "prefix":[...], "tail_bound":..., "generator":...} ----

inline json to_json(const TruncatedSequence& s) {
  json j;
  if (s.exponent() == kInfExponent)
    j["p"] = "inf";
  else
    j["p"] = s.exponent();
  j["prefix"] = to_json(s.prefix());
  j["tail_bound"] = s.tail_bound();
  j["generator"] =
      s.generator_tag().empty() ? json(nullptr) : json(s.generator_tag());
  return j;
}

inline TruncatedSequence sequence_from_json(const json& j) {
  double p;
  const json& pj = j.at("p");
  if (pj.is_string()) {
    if (pj.get<std::string>() != "inf") throw parse_error("bad exponent");
    p = kInfExponent;
  } else {
    p = pj.get<double>();
  }
  if (j.contains("generator") && !j.at("generator").is_null() &&
      !j.contains("prefix")) {
    std::size_t terms = j.value("terms", std::size_t{64});
    return TruncatedSequence::generator(j.at("generator").get<std::string>(),
                                        p, terms);
  }
  Vec prefix = vec_from_json(j.at("prefix"));
  double tail = j.value("tail_bound", 0.0);
  std::string tag;
  if (j.contains("generator") && !j.at("generator").is_null())
    tag = j.at("generator").get<std::string>();
  return TruncatedSequence::with_tail(std::move(prefix), p, tail, tag);
}

// ---- functionals: {"basis":[...], "values":[...], "norm":...} ----

inline SubspaceFunctional functional_from_json(const json& j, double tol,
                                               std::uint64_t seed) {
  std::vector<Vec> basis;
  for (const auto& b : j.at("basis")) basis.push_back(vec_from_json(b));
  std::vector<double> values = j.at("values").get<std::vector<double>>();
  NormSpec norm = norm_from_json(j.at("norm"));
  return make_subspace_functional(std::move(basis), std::move(values),
                                  std::move(norm), tol, seed);
}

// ---- sparse finite-support functions: {"support":{"a":[re,im], ...}} ----

inline json to_json(const FiniteSupportFunction& f) {
  json support = json::object();
  for (const auto& [k, v] : f.support()) support[k] = to_json(v);
  return json{{"support", support}};
}

inline FiniteSupportFunction sparse_from_json(const json& j) {
  FiniteSupportFunction f;
  for (const auto& [k, v] : j.at("support").items())
    f.set(k, complex_from_json(v));
  return f;
}

// ---- reports ----

inline json to_json(const Report& r) {
  json j;
  j["kind"] = r.kind;
  j["pass"] = r.pass;
  j["values"] = json::object();
  for (const auto& [k, v] : r.values) j["values"][k] = v;
  j["witnesses"] = json::object();
  for (const auto& [k, v] : r.witnesses) j["witnesses"][k] = to_json(v);
  j["notes"] = r.notes;
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw parse_error(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

}  // namespace normkit

#endif
