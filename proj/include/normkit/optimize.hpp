// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_OPTIMIZE_HPP
#define NORMKIT_OPTIMIZE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "normkit/rng.hpp"

namespace normkit {

using RealVec = std::vector<double>;
using RealObjective = std::function<double(const RealVec&)>;

namespace detail {

// Direction set for pattern search. Up to dimension 6 all sign patterns
// {-1,0,1}^k are used (diagonals matter for nonsmooth objectives); beyond
// that, coordinate directions plus seeded random diagonals.
inline std::vector<RealVec> pattern_directions(std::size_t k,
                                               std::uint64_t seed = 0) {
  std::vector<RealVec> dirs;
  if (k <= 6) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
      RealVec d(k, 0.0);
      std::size_t c = code;
      double len2 = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        int s = static_cast<int>(c % 3);  // 0, 1, 2 -> 0, +1, -1
        c /= 3;
        d[i] = (s == 0) ? 0.0 : (s == 1 ? 1.0 : -1.0);
        len2 += d[i] * d[i];
      }
      double inv = 1.0 / std::sqrt(len2);
      for (auto& v : d) v *= inv;
      dirs.push_back(std::move(d));
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      RealVec d(k, 0.0);
      d[i] = 1.0;
      dirs.push_back(d);
      d[i] = -1.0;
      dirs.push_back(d);
    }
    Rng rng(seed ^ 0x5bf03635u);
    for (std::size_t extra = 0; extra < 4 * k; ++extra) {
      RealVec d(k);
      double len2 = 0.0;
      for (auto& v : d) {
        v = rng.normal();
        len2 += v * v;
      }
      double inv = 1.0 / std::sqrt(len2);
      for (auto& v : d) v *= inv;
      dirs.push_back(std::move(d));
    }
  }
  return dirs;
}

}  // namespace detail

struct PatternSearchOptions {
  double initial_step = 1.0;
  double min_step = 1e-13;
  double expand = 2.0;
  double shrink = 0.5;
  // Objectives of the form norm(affine) +- linear cancel catastrophically at
  // huge arguments; the caps keep the iterate where evaluation noise stays
  // below the optimizer tolerances even when the infimum sits at infinity.
  // Flat tails are the dangerous case: accepting noise-level "improvements"
  // there turns the search into a random walk outward, so the radius bounds
  // the whole trajectory, not just one step.
  double max_step = 1e12;
  double max_radius = std::numeric_limits<double>::infinity();
  std::size_t max_evals = 2'000'000;
};

// Derivative-free descent: sweep a fixed direction set, expand the step on
// success, shrink on failure. When a sweep stalls, seeded random directions
// are tried at the same step before shrinking; that makes the direction set
// asymptotically dense, which nonsmooth valleys (polyhedral norms) need.
inline double pattern_search(const RealObjective& f, RealVec& x,
                             const PatternSearchOptions& opt = {},
                             std::uint64_t dir_seed = 0) {
  const std::size_t k = x.size();
  const auto dirs = detail::pattern_directions(k, dir_seed);
  Rng rescue_rng(dir_seed ^ 0x243f6a8885a308d3ull);
  double fx = f(x);
  double step = opt.initial_step;
  std::size_t evals = 0;
  RealVec cand(k);

  auto try_move = [&](const RealVec& d) {
    bool moved = false;
    for (std::size_t i = 0; i < k; ++i) {
      double c = x[i] + step * d[i];
      c = std::clamp(c, -opt.max_radius, opt.max_radius);
      moved = moved || c != x[i];
      cand[i] = c;
    }
    if (!moved) return false;
    double fc = f(cand);
    ++evals;
    if (fc < fx) {
      x = cand;
      fx = fc;
      return true;
    }
    return false;
  };

  const std::size_t rescues = 4 * k + 8;
  while (step > opt.min_step && evals < opt.max_evals) {
    bool improved = false;
    for (const auto& d : dirs) improved = try_move(d) || improved;
    if (!improved && k > 1) {
      for (std::size_t probe = 0; probe < rescues && !improved; ++probe) {
        RealVec d(k);
        double len2 = 0.0;
        for (auto& v : d) {
          v = rescue_rng.normal();
          len2 += v * v;
        }
        double inv = 1.0 / std::sqrt(len2);
        for (auto& v : d) v *= inv;
        improved = try_move(d);
      }
    }
    step = improved ? std::min(step * opt.expand, opt.max_step)
                    : step * opt.shrink;
  }
  return fx;
}

struct MinimizeOptions {
  double tol = 1e-11;
  std::size_t random_starts = 6;
  double start_scale = 1.0;
  std::uint64_t seed = 0;
  PatternSearchOptions pattern;
};

struct MinimizeResult {
  RealVec arg;
  double value = 0.0;
};

/// Multistart pattern-search minimization. The convex programs in this
/// library (norm +/- linear over coordinates) have no spurious local minima,
/// so multistart only guards against kink stalls of the direction set.
inline MinimizeResult minimize_convex(const RealObjective& f, std::size_t k,
                                      std::vector<RealVec> starts,
                                      const MinimizeOptions& opt = {}) {
  Rng rng(opt.seed ^ 0x7f4a7c15u);
  if (starts.empty()) starts.push_back(RealVec(k, 0.0));
  for (std::size_t s = 0; s < opt.random_starts; ++s) {
    RealVec x(k);
    for (auto& v : x) v = opt.start_scale * rng.normal();
    starts.push_back(std::move(x));
  }
  MinimizeResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (auto& x0 : starts) {
    RealVec x = x0;
    double v = pattern_search(f, x, opt.pattern, opt.seed);
    if (v < best.value) {
      best.value = v;
      best.arg = x;
    }
  }
  // Random-direction polish from the best point; resumes the pattern search
  // if a descent direction was missed by the fixed set.
  for (int round = 0; round < 3; ++round) {
    bool found = false;
    for (std::size_t probe = 0; probe < 32; ++probe) {
      RealVec d(k);
      double len2 = 0.0;
      for (auto& v : d) {
        v = rng.normal();
        len2 += v * v;
      }
      double inv = 1.0 / std::sqrt(len2);
      double h = std::max(1e-7, 1e-6 * std::abs(best.value));
      RealVec cand(k);
      for (std::size_t i = 0; i < k; ++i) cand[i] = best.arg[i] + h * inv * d[i];
      if (f(cand) < best.value - opt.tol) {
        PatternSearchOptions resume = opt.pattern;
        resume.initial_step = 1e-4;
        best.value = pattern_search(f, cand, resume, opt.seed + probe);
        best.arg = cand;
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return best;
}

}  // namespace normkit

#endif
