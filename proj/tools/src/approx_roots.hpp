// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rootmult/ball.hpp"
#include "rootmult/poly.hpp"

namespace rootmult::cli {

// Simultaneous-iteration (Durand-Kerner) root approximation of a squarefree
// monic polynomial at roughly `prec` accurate bits. Deterministic: fixed
// starting points and a fixed convergence schedule. Non-certified - used
// only for planning estimates and plot placement, never for solving.
std::vector<Complex> approximate_roots(const MonicPoly& q, mpfr_prec_t prec);

}  // namespace rootmult::cli
