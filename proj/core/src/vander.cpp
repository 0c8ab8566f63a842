// SPDX-License-Identifier: Apache-2.0
#include "rootmult/vander.hpp"

#include <cstddef>
#include <stdexcept>

#include "rootmult/errors.hpp"
#include "rootmult/planner.hpp"

namespace rootmult {

namespace {

struct ExactDomain {
  using Scalar = BigRational;
  static Scalar from_int(long v) { return Scalar(v); }
  static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  static Scalar invert(const Scalar& a) { return Scalar(1) / a; }
  static void require_distinct(const Scalar& a, const Scalar& b) {
    if (a == b) throw RepeatedRoot("repeated root");
  }
  static void require_nonzero(const Scalar& a) {
    if (a == 0) throw ZeroRoot("zero root");
  }
};

struct DiskDomain {
  using Scalar = ComplexDisk;
  static Scalar from_int(long v) { return ComplexDisk::of_long(v); }
  static Scalar sub(const Scalar& a, const Scalar& b) { return rootmult::sub(a, b); }
  static Scalar invert(const Scalar& a) { return inv(a); }
  static void require_distinct(const Scalar& a, const Scalar& b) {
    if (!disjoint(a, b)) throw RepeatedRoot("root disks intersect");
  }
  static void require_nonzero(const Scalar& a) {
    if (!excludes_zero(a)) {
      throw DiskContainsZero("root disk cannot be certified away from zero");
    }
  }
};

template <typename D>
StructuredInverse<typename D::Scalar> build(std::span<const typename D::Scalar> roots,
                                            bool scaled) {
  using S = typename D::Scalar;
  const std::size_t n = roots.size();
  if (n == 0) throw std::invalid_argument("need at least one root");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) D::require_distinct(roots[i], roots[j]);
  }
  if (scaled) {
    for (const S& r : roots) D::require_nonzero(r);
  }

  const S zero = D::from_int(0);
  const S one = D::from_int(1);

  StructuredInverse<S> out;
  out.delta.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // product of per-difference inverses: inverting each factor keeps the
    // enclosure well away from zero, where inverting the whole product can
    // fail once the accumulated relative radius passes 1
    S prod = one;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) prod = prod * D::invert(D::sub(roots[i], roots[k]));
    }
    out.delta.push_back(prod);
  }

  // W(i,j) = prod_{k=j+1, k != i} (r_i - r_k) for i <= j, zero below
  out.w = Matrix<S>(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    S prod = one;  // column n-1 has the empty product
    for (std::size_t j = n; j-- > i + 1;) {
      out.w(i, j) = prod;
      prod = prod * D::sub(roots[i], roots[j]);
    }
    out.w(i, i) = prod;
  }

  // Unit lower triangular: row i holds the coefficients of
  // prod_{k < i} (x - r_k) via L(i,j) = L(i-1,j-1) - r_{i-1} L(i-1,j).
  out.l = Matrix<S>(n, n, zero);
  out.l(0, 0) = one;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      S t = j > 0 ? out.l(i - 1, j - 1) : zero;
      out.l(i, j) = t - roots[i - 1] * out.l(i - 1, j);
    }
  }

  Matrix<S> dw(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dw(i, j) = out.delta[i] * out.w(i, j);
  }
  out.product = matmul(dw, out.l);

  if (scaled) {
    for (std::size_t i = 0; i < n; ++i) {
      S ri = D::invert(roots[i]);
      for (std::size_t j = 0; j < n; ++j) {
        out.product(i, j) = ri * out.product(i, j);
      }
    }
  }
  return out;
}

}  // namespace

StructuredInverse<BigRational> vandermonde_inverse(std::span<const BigRational> roots) {
  return build<ExactDomain>(roots, false);
}
StructuredInverse<ComplexDisk> vandermonde_inverse(std::span<const ComplexDisk> roots) {
  return build<DiskDomain>(roots, false);
}
StructuredInverse<BigRational> v0_inverse(std::span<const BigRational> roots) {
  return build<ExactDomain>(roots, true);
}
StructuredInverse<ComplexDisk> v0_inverse(std::span<const ComplexDisk> roots) {
  return build<DiskDomain>(roots, true);
}

Matrix<BigRational> vandermonde(std::span<const BigRational> roots) {
  const std::size_t n = roots.size();
  Matrix<BigRational> v(n, n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    BigRational p(1);
    for (std::size_t j = 0; j < n; ++j) {
      v(j, i) = p;
      p *= roots[i];
    }
  }
  return v;
}

Matrix<BigRational> v0_matrix(std::span<const BigRational> roots) {
  const std::size_t n = roots.size();
  Matrix<BigRational> v(n, n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    BigRational p = roots[i];
    for (std::size_t j = 0; j < n; ++j) {
      v(j, i) = p;
      p *= roots[i];
    }
  }
  return v;
}

InverseBoundsReport v0_inverse_bounds(std::span<const ComplexDisk> roots) {
  const mpfr_prec_t p = 96;
  const int n = static_cast<int>(roots.size());
  const auto un = static_cast<unsigned long>(n);

  BigFloat eps(p);
  for (const ComplexDisk& d : roots) eps = max(eps, d.radius());
  if (eps.sgn() <= 0) {
    throw std::invalid_argument("need disks of positive common radius");
  }

  Bounds b = extract_bounds(roots, {});
  // need eps < m/4, certified
  if (!(cmp(eps, div_long(b.m, 4, MPFR_RNDD, p)) < 0)) {
    throw PrecisionTooCoarse("disk radius must stay below m/4");
  }

  StructuredInverse<ComplexDisk> s = v0_inverse(roots);
  InverseBoundsReport rep{BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  for (std::size_t i = 0; i < s.product.rows(); ++i) {
    for (std::size_t j = 0; j < s.product.cols(); ++j) {
      rep.observed_diameter = max(rep.observed_diameter, diameter(s.product(i, j)));
      rep.observed_abs = max(rep.observed_abs, abs_value(s.product(i, j)));
    }
  }

  // 2^(2n+6) n / (m^2 r) (MR/m)^n eps, downward
  BigFloat ratio = div(mul(b.M, b.R, MPFR_RNDD, p), b.m, MPFR_RNDD, p);
  BigFloat growth = pow_ui(ratio, un, MPFR_RNDD, p);
  BigFloat d = mul_long(BigFloat::pow2(2L * n + 6, p), n, MPFR_RNDD, p);
  d = div(d, mul(sqr(b.m, MPFR_RNDU, p), b.r, MPFR_RNDU, p), MPFR_RNDD, p);
  d = mul(d, growth, MPFR_RNDD, p);
  rep.diameter_bound = mul(d, eps, MPFR_RNDD, p);

  // (2n / r) (RM/m)^n, downward
  rep.abs_bound = div(mul_long(growth, 2L * n, MPFR_RNDD, p), b.r, MPFR_RNDD, p);
  return rep;
}

}  // namespace rootmult
