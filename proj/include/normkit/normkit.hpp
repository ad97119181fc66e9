// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_NORMKIT_HPP
#define NORMKIT_NORMKIT_HPP

#include "normkit/balls.hpp"
#include "normkit/bilinear.hpp"
#include "normkit/equivalence.hpp"
#include "normkit/hahn_banach.hpp"
#include "normkit/lp.hpp"
#include "normkit/matrix.hpp"
#include "normkit/norms.hpp"
#include "normkit/operators.hpp"
#include "normkit/oracles.hpp"
#include "normkit/report.hpp"
#include "normkit/sampling.hpp"
#include "normkit/scalar.hpp"
#include "normkit/suite.hpp"
#include "normkit/tensor.hpp"
#include "normkit/vector.hpp"

#endif
