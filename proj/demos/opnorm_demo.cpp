// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Small tour: operator norms under different norm pairs, with the
// certificate re-checked on random samples.

#include <cstdio>

#include "normkit/normkit.hpp"

int main() {
  using namespace normkit;

  Matrix m(2, 2);
  m(0, 0) = 1.0; m(0, 1) = 2.0;
  m(1, 0) = 3.0; m(1, 1) = 4.0;

  struct Pair { double ps, pt; const char* label; };
  for (Pair p : {Pair{1.0, 1.0, "1 -> 1"}, Pair{2.0, 2.0, "2 -> 2"},
                 Pair{kInfExponent, kInfExponent, "inf -> inf"},
                 Pair{3.0, 1.5, "3 -> 1.5"}}) {
    LinearOperator op(m, NormSpec::p_norm(p.ps, 2), NormSpec::p_norm(p.pt, 2));
    auto r = operator_norm(op, 1e-9);
    auto cert = continuity_certificate(op, 2000, 42);
    std::printf("||T||_{%s} = %.12f  (%s, lower %.12f, violations %zu)\n",
                p.label, r.value, to_string(r.method), r.certified_lower,
                cert.violations.size());
  }
  return 0;
}
