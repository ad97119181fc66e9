// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_SAMPLING_HPP
#define NORMKIT_SAMPLING_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "normkit/norms.hpp"
#include "normkit/rng.hpp"

namespace normkit {

struct invalid_norm_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SampleMode { OnSphere, InBall };

// Gaussian draws normalized by the target norm. Coverage of the sphere is
// all that is needed for sup estimation; no uniformity claim is made.
inline Vec sample_unit_vector(const NormSpec& norm, SampleMode mode, Rng& rng,
                              bool complex_field = true) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec x = rng.gaussian_vector(norm.dim(), complex_field);
    if (norm2(x) == 0.0) continue;  // astronomically unlikely
    double n = norm(x);
    if (!(n > 0.0) || !std::isfinite(n))
      throw invalid_norm_error(
          "norm evaluated to a nonpositive or nonfinite value on a nonzero "
          "vector");
    x = scale(Complex(1.0 / n, 0.0), x);
    if (mode == SampleMode::InBall)
      x = scale(Complex(rng.uniform(), 0.0), x);
    return x;
  }
  throw std::runtime_error("sampling failed to draw a nonzero vector");
}

inline std::vector<Vec> sample_unit_vectors(const NormSpec& norm,
                                            std::size_t count, SampleMode mode,
                                            std::uint64_t seed,
                                            bool complex_field = true) {
  if (count == 0) throw std::invalid_argument("count must be >= 1");
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(sample_unit_vector(norm, mode, rng, complex_field));
  return out;
}

}  // namespace normkit

#endif
