// SPDX-License-Identifier: Apache-2.0
#include "rootmult/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootmult {

namespace {

// Directed-rounding real interval, lo <= x <= hi. Used to carry the rounding
// error of center computations; the final center is the midpoint and the
// halfwidth goes into the radius.
struct Iv {
  BigFloat lo, hi;
};

Iv iv_exact(const BigFloat& x) { return {x, x}; }

Iv iv_of_q(const BigRational& q, mpfr_prec_t p) {
  return {BigFloat::of(q, p, MPFR_RNDD), BigFloat::of(q, p, MPFR_RNDU)};
}

Iv iv_add(const Iv& a, const Iv& b, mpfr_prec_t p) {
  return {add(a.lo, b.lo, MPFR_RNDD, p), add(a.hi, b.hi, MPFR_RNDU, p)};
}

Iv iv_sub(const Iv& a, const Iv& b, mpfr_prec_t p) {
  return {sub(a.lo, b.hi, MPFR_RNDD, p), sub(a.hi, b.lo, MPFR_RNDU, p)};
}

Iv iv_neg(const Iv& a) { return {neg(a.hi), neg(a.lo)}; }

Iv iv_mul(const Iv& a, const Iv& b, mpfr_prec_t p) {
  const BigFloat* as[2] = {&a.lo, &a.hi};
  const BigFloat* bs[2] = {&b.lo, &b.hi};
  BigFloat lo = mul(a.lo, b.lo, MPFR_RNDD, p);
  BigFloat hi = mul(a.lo, b.lo, MPFR_RNDU, p);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      lo = min(lo, mul(*as[i], *bs[j], MPFR_RNDD, p));
      hi = max(hi, mul(*as[i], *bs[j], MPFR_RNDU, p));
    }
  }
  return {lo, hi};
}

Iv iv_sqr(const Iv& a, mpfr_prec_t p) {
  BigFloat lo_abs = [&] {
    if (a.lo.sgn() > 0) return a.lo;
    if (a.hi.sgn() < 0) return neg(a.hi);
    return BigFloat::of(0L, p);
  }();
  BigFloat hi_abs = max(abs(a.lo), abs(a.hi));
  return {sqr(lo_abs, MPFR_RNDD, p), sqr(hi_abs, MPFR_RNDU, p)};
}

// a / b for a positive-bounded denominator (b.lo > 0).
Iv iv_div_pos(const Iv& a, const Iv& b, mpfr_prec_t p) {
  const BigFloat& num_lo = a.lo;
  const BigFloat& num_hi = a.hi;
  BigFloat lo = num_lo.sgn() >= 0 ? div(num_lo, b.hi, MPFR_RNDD, p)
                                  : div(num_lo, b.lo, MPFR_RNDD, p);
  BigFloat hi = num_hi.sgn() >= 0 ? div(num_hi, b.lo, MPFR_RNDU, p)
                                  : div(num_hi, b.hi, MPFR_RNDU, p);
  return {lo, hi};
}

BigFloat iv_mid(const Iv& a, mpfr_prec_t p) {
  BigFloat s = add(a.lo, a.hi, MPFR_RNDN, p);
  return mul_pow2(s, -1);
}

// Upper bound on |true - mid|.
BigFloat iv_err(const Iv& a, const BigFloat& mid, mpfr_prec_t p) {
  BigFloat up = sub(a.hi, mid, MPFR_RNDU, p);
  BigFloat dn = sub(mid, a.lo, MPFR_RNDU, p);
  return max(max(up, dn), BigFloat::of(0L, p));
}

// Lower bound on |x| for x in the interval.
BigFloat iv_abs_lower(const Iv& a, mpfr_prec_t p) {
  if (a.lo.sgn() > 0) return a.lo;
  if (a.hi.sgn() < 0) return neg(a.hi);
  return BigFloat::of(0L, p);
}

BigFloat iv_abs_upper(const Iv& a) { return max(abs(a.lo), abs(a.hi)); }

struct CIv {
  Iv re, im;
};

CIv civ_exact(const Complex& z) { return {iv_exact(z.re), iv_exact(z.im)}; }

CIv civ_mul(const CIv& a, const CIv& b, mpfr_prec_t p) {
  return {iv_sub(iv_mul(a.re, b.re, p), iv_mul(a.im, b.im, p), p),
          iv_add(iv_mul(a.re, b.im, p), iv_mul(a.im, b.re, p), p)};
}

// Collapses per-component intervals into a midpoint center plus a magnitude
// bound on the collapse error (|err_re| + |err_im| >= euclidean error).
struct Collapsed {
  Complex center;
  BigFloat slack;
};

Collapsed collapse(const CIv& z, mpfr_prec_t p) {
  Complex c{iv_mid(z.re, p), iv_mid(z.im, p)};
  BigFloat slack =
      add(iv_err(z.re, c.re, p), iv_err(z.im, c.im, p), MPFR_RNDU, p);
  return {std::move(c), std::move(slack)};
}

BigFloat abs_upper(const Complex& z, mpfr_prec_t p) {
  return hypot(z.re, z.im, MPFR_RNDU, p);
}

BigFloat abs_lower_pt(const Complex& z, mpfr_prec_t p) {
  return hypot(z.re, z.im, MPFR_RNDD, p);
}

void check_radius(const BigFloat& r) {
  if (!r.is_finite() || r.sgn() < 0) {
    throw std::invalid_argument("disk radius must be finite and nonnegative");
  }
}

}  // namespace

ComplexDisk::ComplexDisk(Complex center, BigFloat radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  check_radius(radius_);
  if (!center_.re.is_finite() || !center_.im.is_finite()) {
    throw std::invalid_argument("disk center must be finite");
  }
}

ComplexDisk ComplexDisk::exact(Complex center) {
  mpfr_prec_t p = std::max(center.re.prec(), center.im.prec());
  return ComplexDisk(std::move(center), BigFloat::of(0L, p));
}

ComplexDisk ComplexDisk::of_long(long re, mpfr_prec_t prec) {
  return exact({BigFloat::of(re, prec), BigFloat::of(0L, prec)});
}

ComplexDisk ComplexDisk::of_rational(const BigRational& re, const BigRational& im,
                                     const BigRational& radius, mpfr_prec_t prec) {
  if (radius < 0) throw std::invalid_argument("disk radius must be nonnegative");
  Iv ire = iv_of_q(re, prec);
  Iv iim = iv_of_q(im, prec);
  Collapsed c = collapse({ire, iim}, prec);
  BigFloat r = add(BigFloat::of(radius, prec, MPFR_RNDU), c.slack, MPFR_RNDU, prec);
  return ComplexDisk(std::move(c.center), std::move(r));
}

mpfr_prec_t ComplexDisk::prec() const {
  return std::max({center_.re.prec(), center_.im.prec(), radius_.prec()});
}

ComplexDisk ComplexDisk::widen_precision(mpfr_prec_t prec) const {
  mpfr_prec_t p = std::max(prec, this->prec());
  Complex c{BigFloat(p), BigFloat(p)};
  mpfr_set(c.re.raw(), center_.re.raw(), MPFR_RNDN);  // exact: p >= source prec
  mpfr_set(c.im.raw(), center_.im.raw(), MPFR_RNDN);
  BigFloat r(p);
  mpfr_set(r.raw(), radius_.raw(), MPFR_RNDN);
  return ComplexDisk(std::move(c), std::move(r));
}

ComplexDisk add(const ComplexDisk& a, const ComplexDisk& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  CIv z{iv_add(iv_exact(a.center().re), iv_exact(b.center().re), p),
        iv_add(iv_exact(a.center().im), iv_exact(b.center().im), p)};
  Collapsed c = collapse(z, p);
  BigFloat r = add(a.radius(), b.radius(), MPFR_RNDU, p);
  r = add(r, c.slack, MPFR_RNDU, p);
  return ComplexDisk(std::move(c.center), std::move(r));
}

ComplexDisk neg(const ComplexDisk& a) {
  return ComplexDisk({neg(a.center().re), neg(a.center().im)}, a.radius());
}

ComplexDisk sub(const ComplexDisk& a, const ComplexDisk& b) { return add(a, neg(b)); }

ComplexDisk mul(const ComplexDisk& a, const ComplexDisk& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  Collapsed c = collapse(civ_mul(civ_exact(a.center()), civ_exact(b.center()), p), p);
  // radius |a| r2 + |b| r1 + r1 r2, every step outward
  BigFloat abs_a = abs_upper(a.center(), p);
  BigFloat abs_b = abs_upper(b.center(), p);
  BigFloat r = mul(abs_a, b.radius(), MPFR_RNDU, p);
  r = add(r, mul(abs_b, a.radius(), MPFR_RNDU, p), MPFR_RNDU, p);
  r = add(r, mul(a.radius(), b.radius(), MPFR_RNDU, p), MPFR_RNDU, p);
  r = add(r, c.slack, MPFR_RNDU, p);
  return ComplexDisk(std::move(c.center), std::move(r));
}

ComplexDisk inv(const ComplexDisk& b) {
  mpfr_prec_t p = b.prec();
  // q = |b|^2 - r^2 must be certifiably positive
  Iv bre = iv_exact(b.center().re);
  Iv bim = iv_exact(b.center().im);
  Iv q = iv_sub(iv_add(iv_sqr(bre, p), iv_sqr(bim, p), p),
                iv_sqr(iv_exact(b.radius()), p), p);
  if (q.lo.sgn() <= 0) {
    throw DiskContainsZero("disk contains (or cannot be certified to exclude) zero");
  }
  CIv z{iv_div_pos(bre, q, p), iv_div_pos(iv_neg(bim), q, p)};
  Collapsed c = collapse(z, p);
  BigFloat r = div(b.radius(), q.lo, MPFR_RNDU, p);
  r = add(r, c.slack, MPFR_RNDU, p);
  return ComplexDisk(std::move(c.center), std::move(r));
}

ComplexDisk pow(const ComplexDisk& a, unsigned long n) {
  if (n == 0) throw std::invalid_argument("pow exponent must be >= 1");
  mpfr_prec_t p = a.prec();
  CIv acc = civ_exact(a.center());
  CIv base = acc;
  for (unsigned long i = 1; i < n; ++i) acc = civ_mul(acc, base, p);
  Collapsed c = collapse(acc, p);
  // radius (|a| + r)^n - |a|^n: first term up, second down, difference up
  BigFloat hi = pow_ui(add(abs_upper(a.center(), p), a.radius(), MPFR_RNDU, p), n,
                       MPFR_RNDU, p);
  BigFloat lo = pow_ui(abs_lower_pt(a.center(), p), n, MPFR_RNDD, p);
  BigFloat r = max(sub(hi, lo, MPFR_RNDU, p), BigFloat::of(0L, p));
  r = add(r, c.slack, MPFR_RNDU, p);
  return ComplexDisk(std::move(c.center), std::move(r));
}

ComplexDisk operator+(const ComplexDisk& a, const ComplexDisk& b) { return add(a, b); }
ComplexDisk operator-(const ComplexDisk& a, const ComplexDisk& b) { return sub(a, b); }
ComplexDisk operator*(const ComplexDisk& a, const ComplexDisk& b) { return mul(a, b); }
ComplexDisk operator-(const ComplexDisk& a) { return neg(a); }

BigFloat diameter(const ComplexDisk& a) { return mul_pow2(a.radius(), 1); }

BigFloat abs_value(const ComplexDisk& a) {
  mpfr_prec_t p = a.prec();
  return add(abs_upper(a.center(), p), a.radius(), MPFR_RNDU, p);
}

BigFloat abs_lower(const ComplexDisk& a) {
  mpfr_prec_t p = a.prec();
  BigFloat d = sub(abs_lower_pt(a.center(), p), a.radius(), MPFR_RNDD, p);
  return max(d, BigFloat::of(0L, p));
}

bool disjoint(const ComplexDisk& a, const ComplexDisk& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  Iv dre = iv_sub(iv_exact(a.center().re), iv_exact(b.center().re), p);
  Iv dim = iv_sub(iv_exact(a.center().im), iv_exact(b.center().im), p);
  BigFloat dist_lo = hypot(iv_abs_lower(dre, p), iv_abs_lower(dim, p), MPFR_RNDD, p);
  BigFloat rsum = add(a.radius(), b.radius(), MPFR_RNDU, p);
  return cmp(dist_lo, rsum) > 0;
}

bool excludes_zero(const ComplexDisk& a) { return abs_lower(a).sgn() > 0; }

bool contains(const ComplexDisk& a, const Complex& z) {
  mpfr_prec_t p = std::max(a.prec(), std::max(z.re.prec(), z.im.prec())) + 32;
  Iv dre = iv_sub(iv_exact(z.re), iv_exact(a.center().re), p);
  Iv dim = iv_sub(iv_exact(z.im), iv_exact(a.center().im), p);
  BigFloat dist_up = hypot(iv_abs_upper(dre), iv_abs_upper(dim), MPFR_RNDU, p);
  return cmp(dist_up, a.radius()) <= 0;
}

bool contains(const ComplexDisk& a, const BigRational& re, const BigRational& im) {
  mpfr_prec_t p = a.prec() + 64;
  Iv dre = iv_sub(iv_of_q(re, p), iv_exact(a.center().re), p);
  Iv dim = iv_sub(iv_of_q(im, p), iv_exact(a.center().im), p);
  BigFloat dist_up = hypot(iv_abs_upper(dre), iv_abs_upper(dim), MPFR_RNDU, p);
  return cmp(dist_up, a.radius()) <= 0;
}

}  // namespace rootmult
