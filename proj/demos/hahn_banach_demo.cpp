// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Extends f(t, 0) = t from span{e1} in (R^2, ||.||_inf) and prints the
// one-step interval; then builds a norming functional for (3, 4) in l2.

#include <cstdio>

#include "normkit/normkit.hpp"

int main() {
  using namespace normkit;

  NormSpec sup2 = NormSpec::p_norm(kInfExponent, 2);
  auto f = make_subspace_functional({unit_vector(2, 0)}, {1.0}, sup2, 1e-9);
  auto [g, step] = one_step_extension(f, unit_vector(2, 1), 1e-9);
  std::printf("one step: a = %.3e, b = %.3e, c = %.3e, ||g||/||f|| = %.9f\n",
              step.a, step.b, step.c, step.measured_norm_ratio);

  NormSpec l2 = NormSpec::p_norm(2.0, 2);
  Vec x = real_vector({3.0, 4.0});
  auto xp = norming_functional(x, l2, 1e-9);
  Vec w = coefficients(xp);
  std::printf("norming functional for (3,4): w = (%.6f, %.6f), <x,w> = %.6f\n",
              w[0].real(), w[1].real(), evaluate(xp, x));
  (void)g;
  return 0;
}
