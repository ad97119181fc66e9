// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_RNG_HPP
#define NORMKIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "normkit/vector.hpp"

namespace normkit {

// Seeded generator with hand-rolled Gaussian sampling (Box-Muller) so that
// streams do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return (eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t uniform_index(std::uint64_t n) { return eng_() % n; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  Complex normal_complex() { return Complex(normal(), normal()); }

  // Gaussian vector; real field keeps imaginary parts at zero.
  Vec gaussian_vector(std::size_t dim, bool complex_field) {
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i)
      v[i] = complex_field ? normal_complex() : Complex(normal(), 0.0);
    return v;
  }

  // Derives an independent child stream; used to keep fan-out deterministic.
  Rng fork() { return Rng(eng_() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace normkit

#endif
