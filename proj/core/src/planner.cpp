// SPDX-License-Identifier: Apache-2.0
#include "rootmult/planner.hpp"

#include <cstddef>
#include <stdexcept>

#include "rootmult/errors.hpp"

namespace rootmult {

namespace {

constexpr mpfr_prec_t kPlanPrec = 96;

// Certified bounds on the distance between members of two disks.
BigFloat pair_distance_upper(const ComplexDisk& a, const ComplexDisk& b, mpfr_prec_t p) {
  BigFloat dre = max(abs(sub(a.center().re, b.center().re, MPFR_RNDU, p)),
                     abs(sub(a.center().re, b.center().re, MPFR_RNDD, p)));
  BigFloat dim = max(abs(sub(a.center().im, b.center().im, MPFR_RNDU, p)),
                     abs(sub(a.center().im, b.center().im, MPFR_RNDD, p)));
  BigFloat d = hypot(dre, dim, MPFR_RNDU, p);
  d = add(d, a.radius(), MPFR_RNDU, p);
  return add(d, b.radius(), MPFR_RNDU, p);
}

BigFloat pair_distance_lower(const ComplexDisk& a, const ComplexDisk& b, mpfr_prec_t p) {
  return abs_lower(sub(a.widen_precision(p), b.widen_precision(p)));
}

}  // namespace

Bounds extract_bounds(std::span<const ComplexDisk> roots,
                      std::span<const BigRational> coeffs) {
  if (roots.empty()) throw std::invalid_argument("need at least one root");
  const mpfr_prec_t p = kPlanPrec;
  const BigFloat one = BigFloat::of(1L, p);

  Bounds out{one, one, one, one, one};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.R = max(out.R, abs_value(roots[i].widen_precision(p)));
    BigFloat lo = abs_lower(roots[i].widen_precision(p));
    if (lo.sgn() <= 0) {
      throw DiskContainsZero("root disk cannot be certified away from zero");
    }
    out.r = min(out.r, lo);
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      BigFloat dlo = pair_distance_lower(roots[i], roots[j], p);
      if (dlo.sgn() <= 0) {
        throw RepeatedRoot("two root disks intersect (or roots coincide)");
      }
      out.m = min(out.m, dlo);
      out.M = max(out.M, pair_distance_upper(roots[i], roots[j], p));
    }
  }
  for (const BigRational& cq : coeffs) {
    BigRational a = cq >= 0 ? cq : BigRational(-cq);
    out.c = max(out.c, BigFloat::of(a, p, MPFR_RNDU));
  }
  return out;
}

BigFloat epsilon_bound(const Bounds& b, int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const mpfr_prec_t p = kPlanPrec;
  const auto un = static_cast<unsigned long>(n);

  // numerator m^2 r m^n downward
  BigFloat num = sqr(b.m, MPFR_RNDD, p);
  num = mul(num, b.r, MPFR_RNDD, p);
  num = mul(num, pow_ui(b.m, un, MPFR_RNDD, p), MPFR_RNDD, p);

  // denominator 2^(2n+7) n^5 (MRc)^n upward
  BigFloat den = BigFloat::pow2(2L * n + 7, p);
  den = mul(den, pow_ui(BigFloat::of(static_cast<long>(n), p), 5, MPFR_RNDU, p),
            MPFR_RNDU, p);
  BigFloat mrc = mul(mul(b.M, b.R, MPFR_RNDU, p), b.c, MPFR_RNDU, p);
  den = mul(den, pow_ui(mrc, un, MPFR_RNDU, p), MPFR_RNDU, p);

  return div(num, den, MPFR_RNDD, p);
}

long certified_bits(const BigFloat& epsilon) {
  if (epsilon.sgn() <= 0 || cmp(epsilon, 1L) >= 0) {
    throw std::invalid_argument("need 0 < epsilon < 1");
  }
  BigFloat bits = neg(log2(epsilon, MPFR_RNDD, kPlanPrec));
  return ceil(bits).to_long();
}

long certified_digits(const BigFloat& epsilon) {
  if (epsilon.sgn() <= 0 || cmp(epsilon, 1L) >= 0) {
    throw std::invalid_argument("need 0 < epsilon < 1");
  }
  BigFloat digits(kPlanPrec);
  mpfr_log10(digits.raw(), epsilon.raw(), MPFR_RNDD);
  return ceil(neg(digits)).to_long();
}

long required_bits(const BigFloat& epsilon) {
  return certified_bits(epsilon) + kGuardBits;
}

PrecisionPlan make_plan(std::span<const ComplexDisk> roots,
                        std::span<const BigRational> coeffs) {
  PrecisionPlan plan;
  plan.bounds = extract_bounds(roots, coeffs);
  plan.n = static_cast<int>(roots.size());
  plan.epsilon = epsilon_bound(plan.bounds, plan.n);
  plan.certified_bits = certified_bits(plan.epsilon);
  plan.required_bits = plan.certified_bits + kGuardBits;
  return plan;
}

}  // namespace rootmult
