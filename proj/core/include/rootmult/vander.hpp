// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "rootmult/ball.hpp"
#include "rootmult/bigfloat.hpp"
#include "rootmult/matrix.hpp"
#include "rootmult/rational.hpp"

namespace rootmult {

// Structured inverse of a Vandermonde matrix: V^{-1} = Delta * W * L with
// Delta diagonal (stored as its diagonal), W upper triangular and L unit
// lower triangular. `product` is the assembled inverse. On the exact domain
// product * V is the identity exactly; on the disk domain every entry of
// `product` encloses the corresponding exact entry for any choice of exact
// roots inside the input disks.
template <typename S>
struct StructuredInverse {
  std::vector<S> delta;
  Matrix<S> w;
  Matrix<S> l;
  Matrix<S> product;
};

// V has rows of increasing powers: row j holds r_i^{j-1}.
// Throws RepeatedRoot when two roots are equal (exact domain) or two disks
// cannot be certified disjoint (disk domain).
StructuredInverse<BigRational> vandermonde_inverse(std::span<const BigRational> roots);
StructuredInverse<ComplexDisk> vandermonde_inverse(std::span<const ComplexDisk> roots);

// The scaled matrix V0 = V diag(r) (rows r_i^j, j = 1..n); its inverse is
// diag(r)^{-1} V^{-1}. Additionally requires every root nonzero: throws
// ZeroRoot (exact) or DiskContainsZero (disk).
StructuredInverse<BigRational> v0_inverse(std::span<const BigRational> roots);
StructuredInverse<ComplexDisk> v0_inverse(std::span<const ComplexDisk> roots);

// Plain assembled matrices, for identity checks.
Matrix<BigRational> vandermonde(std::span<const BigRational> roots);
Matrix<BigRational> v0_matrix(std::span<const BigRational> roots);

// Observed worst-case entry diameter / absolute value of the V0 inverse for
// disks of (near-)common radius eps, against the predicted growth bounds
//   d <= 2^(2n+6) n / (m^2 r) (MR/m)^n eps,  |.| <= (2n/r) (RM/m)^n.
// Bounds are rounded downward and observations upward, so observed <= bound
// checks are rigorous. Requires eps < m/4, else throws PrecisionTooCoarse.
struct InverseBoundsReport {
  BigFloat observed_diameter;
  BigFloat observed_abs;
  BigFloat diameter_bound;
  BigFloat abs_bound;
};
InverseBoundsReport v0_inverse_bounds(std::span<const ComplexDisk> roots);

}  // namespace rootmult
