// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rootmult/bigfloat.hpp"
#include "rootmult/errors.hpp"
#include "rootmult/rational.hpp"

namespace rootmult {

struct Complex {
  BigFloat re, im;
};

// Closed complex disk: center plus nonnegative radius.
//
// Containment contract: for every operation below, the returned disk encloses
// op(x, y) for all x in A, y in B. Centers are computed to round-to-nearest
// quality; the rounding error actually incurred is added to the radius, and
// all radius arithmetic rounds outward. Working precision is carried by the
// operand values (an operation computes at the larger operand precision), so
// the caller fixes precision when constructing its input disks.
//
// Values are immutable after construction; all operations are pure.
class ComplexDisk {
 public:
  // The zero disk.
  ComplexDisk() = default;
  ComplexDisk(Complex center, BigFloat radius);

  static ComplexDisk exact(Complex center);
  static ComplexDisk of_long(long re, mpfr_prec_t prec = 64);
  // Outward-rounded enclosure of an exact rational point / radius.
  static ComplexDisk of_rational(const BigRational& re, const BigRational& im,
                                 const BigRational& radius, mpfr_prec_t prec);

  const Complex& center() const { return center_; }
  const BigFloat& radius() const { return radius_; }
  mpfr_prec_t prec() const;

  // Exact re-representation at a precision at least `prec`.
  ComplexDisk widen_precision(mpfr_prec_t prec) const;

 private:
  Complex center_;
  BigFloat radius_;
};

ComplexDisk add(const ComplexDisk& a, const ComplexDisk& b);
ComplexDisk sub(const ComplexDisk& a, const ComplexDisk& b);
ComplexDisk neg(const ComplexDisk& a);
ComplexDisk mul(const ComplexDisk& a, const ComplexDisk& b);
// Throws DiskContainsZero unless the disk certifiably excludes the origin.
ComplexDisk inv(const ComplexDisk& b);
// n >= 1.
ComplexDisk pow(const ComplexDisk& a, unsigned long n);

ComplexDisk operator+(const ComplexDisk& a, const ComplexDisk& b);
ComplexDisk operator-(const ComplexDisk& a, const ComplexDisk& b);
ComplexDisk operator*(const ComplexDisk& a, const ComplexDisk& b);
ComplexDisk operator-(const ComplexDisk& a);

// d(A) = 2 r, rounded outward.
BigFloat diameter(const ComplexDisk& a);
// |A| = |center| + r, rounded outward.
BigFloat abs_value(const ComplexDisk& a);
// max(|center| - r, 0), rounded toward zero: a certified lower bound on the
// magnitude of every member.
BigFloat abs_lower(const ComplexDisk& a);

// True only when the disks are certifiably disjoint.
bool disjoint(const ComplexDisk& a, const ComplexDisk& b);
// True only when every member has positive magnitude.
bool excludes_zero(const ComplexDisk& a);
// True only when z certifiably lies in the (closed) disk.
bool contains(const ComplexDisk& a, const Complex& z);
bool contains(const ComplexDisk& a, const BigRational& re, const BigRational& im);

}  // namespace rootmult
