// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "rootmult/ball.hpp"
#include "rootmult/bigfloat.hpp"
#include "rootmult/rational.hpp"

namespace rootmult {

// The five clamped quantities the precision budget is built from. Extraction
// from disks is conservative in the direction that shrinks the budget:
// M, R from upper disk bounds, m, r from lower bounds.
struct Bounds {
  BigFloat M;  // max pairwise root distance, floored at 1
  BigFloat m;  // min pairwise root distance, capped at 1
  BigFloat R;  // max root magnitude, floored at 1
  BigFloat r;  // min root magnitude, capped at 1
  BigFloat c;  // max coefficient magnitude, floored at 1
};

struct PrecisionPlan {
  Bounds bounds;
  int n = 0;               // distinct nonzero roots
  BigFloat epsilon;        // root-radius budget, downward-rounded
  long certified_bits = 0; // ceil(log2(1/epsilon))
  long required_bits = 0;  // certified_bits plus the guard margin
};

inline constexpr long kGuardBits = 8;

// Throws RepeatedRoot when a lower-bound pairwise distance is <= 0 and
// DiskContainsZero when a disk cannot be certified away from the origin.
Bounds extract_bounds(std::span<const ComplexDisk> roots,
                      std::span<const BigRational> coeffs);

// eps = m^2 r / (2^(2n+7) n^5) * (m / (MRc))^n, rounded downward so the
// returned value is itself a valid budget.
BigFloat epsilon_bound(const Bounds& b, int n);

// ceil(log2(1/epsilon)); requires 0 < epsilon < 1.
long certified_bits(const BigFloat& epsilon);
// ceil(log10(1/epsilon)): the same budget in decimal digits, for output that
// reports both unit readings.
long certified_digits(const BigFloat& epsilon);
// certified_bits plus kGuardBits: the per-root precision recommendation.
long required_bits(const BigFloat& epsilon);

PrecisionPlan make_plan(std::span<const ComplexDisk> roots,
                        std::span<const BigRational> coeffs);

}  // namespace rootmult
