// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "rootmult/matrix.hpp"
#include "rootmult/rational.hpp"

namespace rootmult {

// Solves M x = b exactly over the rationals. Rows are scaled to integers and
// eliminated fraction-free (Bareiss); pivoting takes the first nonzero entry,
// which in exact arithmetic is a correctness-only concern. Throws
// MatrixSingular when det M = 0.
std::vector<BigRational> exact_solve(const Matrix<BigRational>& m,
                                     std::span<const BigRational> b);

}  // namespace rootmult
