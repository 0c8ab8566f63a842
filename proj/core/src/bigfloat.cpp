// SPDX-License-Identifier: Apache-2.0
#include "rootmult/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rootmult {

namespace {
mpfr_prec_t pick(mpfr_prec_t requested, const BigFloat& a, const BigFloat& b) {
  if (requested > 0) return requested;
  return std::max(a.prec(), b.prec());
}
mpfr_prec_t pick(mpfr_prec_t requested, const BigFloat& a) {
  return requested > 0 ? requested : a.prec();
}
}  // namespace

BigFloat BigFloat::of(long v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(double v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.x_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_z(r.x_, z.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::of(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.x_, q.get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::pow2(long k, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.x_, 1, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  if (mpfr_set_str(r.x_, s.c_str(), 10, rnd) != 0) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

mpq_class BigFloat::to_rational() const {
  if (!is_finite()) throw std::invalid_argument("not a finite value");
  if (is_zero()) return mpq_class(0);
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x_);
  mpq_class q(mant);
  if (e >= 0) {
    mpq_class scale(mpz_class(1) << static_cast<unsigned long>(e));
    q *= scale;
  } else {
    mpq_class scale(mpz_class(1) << static_cast<unsigned long>(-e));
    q /= scale;
  }
  q.canonicalize();
  return q;
}

std::string BigFloat::str(int digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
  int need = mpfr_snprintf(nullptr, 0, fmt, x_);
  std::vector<char> buf(static_cast<std::size_t>(need) + 1);
  mpfr_snprintf(buf.data(), buf.size(), fmt, x_);
  return std::string(buf.data());
}

#define ROOTMULT_BINOP(name, mpfr_fn)                                          \
  BigFloat name(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd,          \
                mpfr_prec_t prec) {                                            \
    BigFloat r(pick(prec, a, b));                                              \
    mpfr_fn(r.raw(), a.raw(), b.raw(), rnd);                                   \
    return r;                                                                  \
  }

ROOTMULT_BINOP(add, mpfr_add)
ROOTMULT_BINOP(sub, mpfr_sub)
ROOTMULT_BINOP(mul, mpfr_mul)
ROOTMULT_BINOP(div, mpfr_div)
ROOTMULT_BINOP(hypot, mpfr_hypot)
#undef ROOTMULT_BINOP

BigFloat sqr(const BigFloat& a, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(pick(prec, a));
  mpfr_sqr(r.raw(), a.raw(), rnd);
  return r;
}

BigFloat sqrt(const BigFloat& a, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(pick(prec, a));
  mpfr_sqrt(r.raw(), a.raw(), rnd);
  return r;
}

BigFloat pow_ui(const BigFloat& a, unsigned long n, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(pick(prec, a));
  mpfr_pow_ui(r.raw(), a.raw(), n, rnd);
  return r;
}

BigFloat log2(const BigFloat& a, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(pick(prec, a));
  mpfr_log2(r.raw(), a.raw(), rnd);
  return r;
}

BigFloat mul_long(const BigFloat& a, long v, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(pick(prec, a));
  mpfr_mul_si(r.raw(), a.raw(), v, rnd);
  return r;
}

BigFloat div_long(const BigFloat& a, long v, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(pick(prec, a));
  mpfr_div_si(r.raw(), a.raw(), v, rnd);
  return r;
}

BigFloat neg(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat mul_pow2(const BigFloat& a, long k) {
  BigFloat r(a.prec());
  if (k >= 0) {
    mpfr_mul_2ui(r.raw(), a.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
  } else {
    mpfr_div_2ui(r.raw(), a.raw(), static_cast<unsigned long>(-k), MPFR_RNDN);
  }
  return r;
}

BigFloat floor(const BigFloat& a) {
  BigFloat r(std::max<mpfr_prec_t>(a.prec(), 64));
  mpfr_floor(r.raw(), a.raw());
  return r;
}

BigFloat ceil(const BigFloat& a) {
  BigFloat r(std::max<mpfr_prec_t>(a.prec(), 64));
  mpfr_ceil(r.raw(), a.raw());
  return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0 ? a : b; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0 ? a : b; }

}  // namespace rootmult
