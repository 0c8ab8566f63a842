// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "rootmult/poly.hpp"
#include "rootmult/rational.hpp"

namespace rootmult {

// Power sums p_1..p_k of the root multiset of a monic polynomial, from its
// proper leading coefficients c_1..c_k (c_0 = 1 implicit):
//   p_j = -j c_j - sum_{i=1}^{j-1} c_{j-i} p_i.
// Total and exact; works on truncated coefficient prefixes.
std::vector<BigRational> power_sums_from_coeffs(std::span<const BigRational> c);

// The forward direction, c_j = -(1/j) sum_{i=1}^{j} c_{j-i} p_i; exact
// inverse of power_sums_from_coeffs.
std::vector<BigRational> coeffs_from_power_sums(std::span<const BigRational> p);

// p_1..p_{j_max} where p_j is the sum of j-th powers of the roots of q,
// counted with multiplicity. For j past deg q the recurrence continues with
// the coefficient list zero-padded.
std::vector<BigRational> power_sums_of_poly_roots(const MonicPoly& q, long j_max);

}  // namespace rootmult
