// SPDX-License-Identifier: Apache-2.0
#include "approx_roots.hpp"

#include <cstddef>

namespace rootmult::cli {

namespace {

struct FC {
  BigFloat re, im;
};

FC fc(double re, double im, mpfr_prec_t p) {
  return {BigFloat::of(re, p), BigFloat::of(im, p)};
}

FC fc_add(const FC& a, const FC& b, mpfr_prec_t p) {
  return {add(a.re, b.re, MPFR_RNDN, p), add(a.im, b.im, MPFR_RNDN, p)};
}

FC fc_sub(const FC& a, const FC& b, mpfr_prec_t p) {
  return {sub(a.re, b.re, MPFR_RNDN, p), sub(a.im, b.im, MPFR_RNDN, p)};
}

FC fc_mul(const FC& a, const FC& b, mpfr_prec_t p) {
  return {sub(mul(a.re, b.re, MPFR_RNDN, p), mul(a.im, b.im, MPFR_RNDN, p), MPFR_RNDN, p),
          add(mul(a.re, b.im, MPFR_RNDN, p), mul(a.im, b.re, MPFR_RNDN, p), MPFR_RNDN, p)};
}

FC fc_div(const FC& a, const FC& b, mpfr_prec_t p) {
  BigFloat n2 = add(sqr(b.re, MPFR_RNDN, p), sqr(b.im, MPFR_RNDN, p), MPFR_RNDN, p);
  FC conj_prod{add(mul(a.re, b.re, MPFR_RNDN, p), mul(a.im, b.im, MPFR_RNDN, p),
                   MPFR_RNDN, p),
               sub(mul(a.im, b.re, MPFR_RNDN, p), mul(a.re, b.im, MPFR_RNDN, p),
                   MPFR_RNDN, p)};
  return {div(conj_prod.re, n2, MPFR_RNDN, p), div(conj_prod.im, n2, MPFR_RNDN, p)};
}

BigFloat fc_abs2(const FC& a, mpfr_prec_t p) {
  return add(sqr(a.re, MPFR_RNDN, p), sqr(a.im, MPFR_RNDN, p), MPFR_RNDN, p);
}

}  // namespace

std::vector<Complex> approximate_roots(const MonicPoly& q, mpfr_prec_t prec) {
  const std::size_t d = static_cast<std::size_t>(q.degree());
  const mpfr_prec_t p = prec + 64;

  std::vector<FC> coeffs;  // c_1..c_d
  coeffs.reserve(d);
  for (const BigRational& c : q.coeffs()) {
    coeffs.push_back({BigFloat::of(c, p, MPFR_RNDN), BigFloat::of(0L, p)});
  }

  if (d == 1) {
    return {Complex{neg(coeffs[0].re), neg(coeffs[0].im)}};
  }

  // z_k = (0.4 + 0.9i)^(k+1): the usual non-symmetric spread
  std::vector<FC> z;
  z.reserve(d);
  FC seed = fc(0.4, 0.9, p);
  FC acc = seed;
  for (std::size_t k = 0; k < d; ++k) {
    z.push_back(acc);
    acc = fc_mul(acc, seed, p);
  }

  const BigFloat tol2 = BigFloat::pow2(-2 * static_cast<long>(prec + 8), p);
  for (int iter = 0; iter < 800; ++iter) {
    BigFloat worst = BigFloat::of(0L, p);
    for (std::size_t k = 0; k < d; ++k) {
      // Horner for the monic polynomial
      FC val{BigFloat::of(1L, p), BigFloat::of(0L, p)};
      for (std::size_t i = 0; i < d; ++i) val = fc_add(fc_mul(val, z[k], p), coeffs[i], p);
      FC denom{BigFloat::of(1L, p), BigFloat::of(0L, p)};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) denom = fc_mul(denom, fc_sub(z[k], z[j], p), p);
      }
      FC step = fc_div(val, denom, p);
      z[k] = fc_sub(z[k], step, p);
      worst = max(worst, fc_abs2(step, p));
    }
    if (cmp(worst, tol2) < 0) break;
  }

  std::vector<Complex> out;
  out.reserve(d);
  for (const FC& v : z) out.push_back(Complex{v.re, v.im});
  return out;
}

}  // namespace rootmult::cli
