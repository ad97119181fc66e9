// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_TENSOR_HPP
#define NORMKIT_TENSOR_HPP

#include <map>
#include <string>
#include <vector>

#include "normkit/scalar.hpp"

namespace normkit {

// Index sets are strings (integers serialize as decimal strings). Pairs are
// keyed "alpha|beta" and ordered numerically when both sides parse as
// integers, lexicographically otherwise, for canonical serialization.
namespace detail {

inline bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = (s[0] == '-') ? -v : v;
  return true;
}

struct NaturalLess {
  static int compare_atom(const std::string& a, const std::string& b) {
    long long ia, ib;
    bool na = parse_int(a, ia), nb = parse_int(b, ib);
    if (na && nb) return ia < ib ? -1 : (ia > ib ? 1 : 0);
    if (na != nb) return na ? -1 : 1;  // numbers sort before words
    return a < b ? -1 : (a > b ? 1 : 0);
  }

  // Pair keys "a|b" compare lexicographically component by component.
  bool operator()(const std::string& a, const std::string& b) const {
    std::size_t pa = a.find('|'), pb = b.find('|');
    if (pa == std::string::npos || pb == std::string::npos)
      return compare_atom(a, b) < 0;
    int first = compare_atom(a.substr(0, pa), b.substr(0, pb));
    if (first != 0) return first < 0;
    return compare_atom(a.substr(pa + 1), b.substr(pb + 1)) < 0;
  }
};

}  // namespace detail

/// Finitely supported function A -> K: the building block of F(A) and, with
/// pair keys, of F(A x B). Explicit zeros are pruned so the support is the
/// genuine support; unit vectors e_alpha satisfy e_alpha(beta) =
/// delta_{alpha beta}.
class FiniteSupportFunction {
 public:
  using Support = std::map<std::string, Complex, detail::NaturalLess>;

  FiniteSupportFunction() = default;

  static FiniteSupportFunction unit(const std::string& alpha) {
    FiniteSupportFunction f;
    f.set(alpha, Complex(1.0, 0.0));
    return f;
  }

  static std::string pair_key(const std::string& a, const std::string& b) {
    if (a.find('|') != std::string::npos || b.find('|') != std::string::npos)
      throw std::invalid_argument("index may not contain '|'");
    return a + "|" + b;
  }

  void set(const std::string& key, Complex value) {
    if (value == Complex(0.0, 0.0))
      support_.erase(key);
    else
      support_[key] = value;
  }

  void add(const std::string& key, Complex value) { set(key, at(key) + value); }

  Complex at(const std::string& key) const {
    auto it = support_.find(key);
    return it == support_.end() ? Complex(0.0, 0.0) : it->second;
  }

  const Support& support() const { return support_; }
  std::size_t support_size() const { return support_.size(); }
  bool zero() const { return support_.empty(); }

  FiniteSupportFunction scaled(Complex a) const {
    FiniteSupportFunction out;
    for (const auto& [k, v] : support_) out.set(k, a * v);
    return out;
  }

  FiniteSupportFunction plus(const FiniteSupportFunction& other) const {
    FiniteSupportFunction out = *this;
    for (const auto& [k, v] : other.support_) out.add(k, v);
    return out;
  }

 private:
  Support support_;
};

/// Psi_0 : F(A) x F(B) -> F(A x B), (f, g) -> ((a, b) -> f(a) g(b)).
/// Bilinear in each slot; unit vectors map to unit vectors of the product
/// index set.
inline FiniteSupportFunction tensor_embed(const FiniteSupportFunction& f,
                                          const FiniteSupportFunction& g) {
  FiniteSupportFunction out;
  for (const auto& [ka, va] : f.support())
    for (const auto& [kb, vb] : g.support())
      out.set(FiniteSupportFunction::pair_key(ka, kb), va * vb);
  return out;
}

/// The unique linear map T on F(A x B) with T(e_(a,b)) = psi(e_a, e_b),
/// hence T o Psi_0 = psi for the bilinear extension of the given values.
class TensorLinearization {
 public:
  TensorLinearization(std::vector<std::string> a_index,
                      std::vector<std::string> b_index,
                      const std::map<std::string, Complex>& psi_on_pairs)
      : a_(std::move(a_index)), b_(std::move(b_index)) {
    for (const auto& a : a_)
      for (const auto& b : b_) {
        std::string key = FiniteSupportFunction::pair_key(a, b);
        auto it = psi_on_pairs.find(key);
        if (it == psi_on_pairs.end())
          throw std::invalid_argument("incomplete specification: missing psi(" +
                                      key + ")");
        psi_[key] = it->second;
      }
  }

  const std::vector<std::string>& a_index() const { return a_; }
  const std::vector<std::string>& b_index() const { return b_; }

  Complex on_pair(const std::string& a, const std::string& b) const {
    return psi_.at(FiniteSupportFunction::pair_key(a, b));
  }

  /// T(h) = sum_(a,b) h(a,b) psi(e_a, e_b); basis expansion of h.
  Complex apply(const FiniteSupportFunction& h) const {
    Complex s(0.0, 0.0);
    for (const auto& [k, v] : h.support()) {
      auto it = psi_.find(k);
      if (it == psi_.end())
        throw std::invalid_argument("support outside A x B: " + k);
      s += v * it->second;
    }
    return s;
  }

  /// The bilinear extension psi(f, g) = sum f(a) g(b) psi(e_a, e_b), the
  /// other route of the factorization T o Psi_0 = psi.
  Complex bilinear_extension(const FiniteSupportFunction& f,
                             const FiniteSupportFunction& g) const {
    Complex s(0.0, 0.0);
    for (const auto& [ka, va] : f.support())
      for (const auto& [kb, vb] : g.support())
        s += va * vb * psi_.at(FiniteSupportFunction::pair_key(ka, kb));
    return s;
  }

 private:
  std::vector<std::string> a_;
  std::vector<std::string> b_;
  std::map<std::string, Complex, detail::NaturalLess> psi_;
};

inline TensorLinearization tensor_linearize(
    const std::map<std::string, Complex>& psi_on_pairs,
    std::vector<std::string> a_index, std::vector<std::string> b_index) {
  return TensorLinearization(std::move(a_index), std::move(b_index),
                             psi_on_pairs);
}

}  // namespace normkit

#endif
