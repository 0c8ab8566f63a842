// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace rootmult {

// Arbitrary-precision floating-point scalar with value semantics.
//
// Rounding is never implicit: every operation that can round takes the
// result precision and an mpfr rounding mode. Comparisons are exact.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(x_, 64); mpfr_set_zero(x_, 1); }
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }

  BigFloat(const BigFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);  // same precision: exact
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(x_, 2);
    mpfr_swap(x_, o.x_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(x_); }

  static BigFloat of(long v, mpfr_prec_t prec);
  static BigFloat of(double v, mpfr_prec_t prec);
  static BigFloat of(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat of(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd);
  // 2^k, exact.
  static BigFloat pow2(long k, mpfr_prec_t prec);
  // Decimal/scientific literal; throws std::invalid_argument on garbage.
  static BigFloat parse(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd);

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  int sgn() const { return mpfr_sgn(x_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(x_, rnd); }
  bool fits_long() const { return mpfr_fits_slong_p(x_, MPFR_RNDN) != 0; }
  long to_long(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_si(x_, rnd); }
  // Every finite value is mantissa * 2^e, hence exactly rational.
  mpq_class to_rational() const;
  std::string str(int digits = 17) const;

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_); }
  friend int cmp(const BigFloat& a, long v) { return mpfr_cmp_si(a.x_, v); }
  friend int cmp(const BigFloat& a, const mpq_class& q) {
    return mpfr_cmp_q(a.x_, q.get_mpq_t());
  }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

 private:
  mpfr_t x_;
};

// Result is computed at precision `prec` (0 means max of the operand
// precisions) under rounding mode `rnd`.
BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat sqr(const BigFloat& a, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat sqrt(const BigFloat& a, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat hypot(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat pow_ui(const BigFloat& a, unsigned long n, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat log2(const BigFloat& a, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat mul_long(const BigFloat& a, long v, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
BigFloat div_long(const BigFloat& a, long v, mpfr_rnd_t rnd, mpfr_prec_t prec = 0);
// Exact in the stored precision.
BigFloat neg(const BigFloat& a);
BigFloat abs(const BigFloat& a);
BigFloat mul_pow2(const BigFloat& a, long k);
// Exact when the integer part fits `prec` bits (it always does here).
BigFloat floor(const BigFloat& a);
BigFloat ceil(const BigFloat& a);

BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);

}  // namespace rootmult
