// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rootmult/ball.hpp"
#include "rootmult/poly.hpp"
#include "rootmult/rational.hpp"

namespace rootmult {

struct DiskRoots {
  std::vector<ComplexDisk> disks;  // pairwise disjoint, all excluding 0
};

struct FactorRoots {
  std::vector<MonicPoly> factors;  // monic, pairwise coprime, none divisible by x
};

// The input bundle. Coefficients are the proper leading ones c_1..c_k in the
// solver's variable (after any y = x^s substitution); at least one per
// distinct root (disk path) or per factor (factor path) — a longer list is
// allowed and the surplus is available to verification.
//
// `degree` is the total degree in the original variable and `degree_scale`
// is how many original-variable degrees one solver-variable degree counts
// (s after substitution, 1 otherwise); the zero-root multiplicity is
// recovered as degree - degree_scale * sum(m_i deg q_i).
struct PolyProblem {
  std::vector<BigRational> coefficients;
  std::optional<long> degree;
  long degree_scale = 1;
  std::variant<DiskRoots, FactorRoots> roots;
};

struct MultiplicityResult {
  std::vector<long> multiplicities;  // >= 1 each
  std::optional<long> m0;            // only when degree was supplied
  bool certified = false;
  std::vector<double> residual_diameters;  // disk path: final disk diameters
};

// Certified pipeline over root disks: power sums are recovered from the
// coefficients exactly in rationals, the scaled Vandermonde inverse is
// applied in disk arithmetic at `precision_bits` working precision, and each
// result disk must trap exactly one integer.
//
// Throws RepeatedRoot / DiskContainsZero on bad inputs, AmbiguousDisk (with
// the planner's recommended bits) when a disk fails to snap, and
// NegativeMultiplicity when a snapped value is < 1 or m0 goes negative.
MultiplicityResult solve_numeric(const PolyProblem& problem, mpfr_prec_t precision_bits);

// Exact pipeline over minimal-polynomial factors (multiplicities shared
// within each factor's root orbit). Throws MatrixSingular when the power-sum
// matrix is singular, NonIntegralSolution when the exact solution is not a
// positive-integer vector, ZeroRoot when a factor is divisible by x.
MultiplicityResult solve_exact(const PolyProblem& problem);

// Compresses coefficients under y = x^s: keeps codegrees s, 2s, ..., ks.
// Every skipped codegree must carry a zero, else NonZeroSkippedCoefficient.
std::vector<BigRational> substitute_codegrees(std::span<const BigRational> coeffs,
                                              long s);

// The unique integer in the disk's real range, provided that range traps
// exactly one integer and the imaginary range contains 0; AmbiguousDisk
// otherwise.
long snap_to_integer(const ComplexDisk& disk);

}  // namespace rootmult
