// SPDX-License-Identifier: Apache-2.0
#include "rootmult/planner.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "rootmult/errors.hpp"
#include "support/test_support.hpp"

using namespace rootmult;
using testing::Rng;

namespace {

const char* kC48 =
    "8332230937213678426258491158832963153453272812465162851";

std::vector<ComplexDisk> unit_fourth_roots(mpfr_prec_t p) {
  std::vector<ComplexDisk> roots;
  long re[] = {1, 0, -1, 0};
  long im[] = {0, 1, 0, -1};
  for (int k = 0; k < 4; ++k) {
    roots.push_back(ComplexDisk::exact({BigFloat::of(re[k], p), BigFloat::of(im[k], p)}));
  }
  return roots;
}

bool releq(const BigFloat& a, const BigRational& q, long bits) {
  BigRational tol = q >= 0 ? q : BigRational(-q);
  if (tol < 1) tol = 1;
  tol /= BigRational(BigInt(1) << static_cast<unsigned>(bits));
  return cmp(a, q - tol) >= 0 && cmp(a, q + tol) <= 0;
}

Bounds bounds_of(const char* M, const char* m, const char* R, const char* r,
                 const char* c) {
  const mpfr_prec_t p = 96;
  return Bounds{BigFloat::of(rational_from_string(M), p, MPFR_RNDN),
                BigFloat::of(rational_from_string(m), p, MPFR_RNDN),
                BigFloat::of(rational_from_string(R), p, MPFR_RNDN),
                BigFloat::of(rational_from_string(r), p, MPFR_RNDN),
                BigFloat::of(rational_from_string(c), p, MPFR_RNDN)};
}

}  // namespace

TEST_SUITE("planner") {

TEST_CASE("bounds of the fourth roots of unity") {
  std::vector<ComplexDisk> roots = unit_fourth_roots(96);
  std::vector<BigRational> coeffs{BigRational(0), BigRational(0), BigRational(0),
                                  BigRational(-1)};
  Bounds b = extract_bounds(roots, coeffs);
  CHECK(cmp(b.M, 2L) == 0);
  // the true min pairwise distance is sqrt(2); the cap at 1 takes over
  CHECK(cmp(b.m, 1L) == 0);
  CHECK(cmp(b.R, 1L) == 0);
  CHECK(cmp(b.r, 1L) == 0);
  CHECK(cmp(b.c, 1L) == 0);
}

TEST_CASE("single root clamps everything it can") {
  std::vector<ComplexDisk> roots{ComplexDisk::of_long(5, 96)};
  std::vector<BigRational> coeffs{BigRational(-5)};
  Bounds b = extract_bounds(roots, coeffs);
  CHECK(cmp(b.M, 1L) == 0);
  CHECK(cmp(b.m, 1L) == 0);
  CHECK(cmp(b.R, 5L) == 0);
  CHECK(cmp(b.r, 1L) == 0);
  CHECK(cmp(b.c, 5L) == 0);
}

TEST_CASE("intersecting disks and zero-containing disks are rejected") {
  std::vector<ComplexDisk> touching{
      ComplexDisk({BigFloat::of(1L, 64), BigFloat::of(0L, 64)}, BigFloat::of(0.5, 64)),
      ComplexDisk({BigFloat::of(1.5, 64), BigFloat::of(0L, 64)}, BigFloat::of(0.5, 64))};
  CHECK_THROWS_AS(extract_bounds(touching, {}), RepeatedRoot);

  std::vector<ComplexDisk> zero{
      ComplexDisk({BigFloat::of(0.25, 64), BigFloat::of(0L, 64)}, BigFloat::of(0.5, 64))};
  CHECK_THROWS_AS(extract_bounds(zero, {}), DiskContainsZero);
}

TEST_CASE("budget for one root with every clamp active is 2^-9") {
  Bounds b = bounds_of("1", "1", "1", "1", "1");
  BigFloat eps = epsilon_bound(b, 1);
  // m^2 r / (2^9 * 1) * 1 = 2^-9
  CHECK(cmp(eps, rational_from_string("1/512")) == 0);
}

TEST_CASE("required bits add the guard margin") {
  BigFloat eps = BigFloat::pow2(-10, 64);
  CHECK(certified_bits(eps) == 10);
  CHECK(required_bits(eps) == 18);
}

TEST_CASE("pinned 16-root dataset budget reproduces 3091 bits") {
  Bounds b = bounds_of("3", "0.14", "4.39", "0.38", kC48);
  BigFloat eps = epsilon_bound(b, 16);
  CHECK(certified_bits(eps) == 3091);
  CHECK(required_bits(eps) == 3091 + kGuardBits);
}

TEST_CASE("pinned 5-root dataset budget stays at or under 252 in both unit readings") {
  Bounds b = bounds_of("4.5", "0.69", "2.25", "1", "125012034");
  BigFloat eps = epsilon_bound(b, 5);
  long bits = certified_bits(eps);
  long digits = certified_digits(eps);
  CHECK(bits == 184);
  CHECK(digits == 56);
  CHECK(bits <= 252);
  CHECK(digits <= 252);
}

TEST_CASE("x^4 - 1 budget agrees with the closed form exactly in rationals") {
  // With the distance left uncapped (min pairwise distance sqrt(2)), the
  // budget formula collapses to (2 - 2 cos(pi/2))^3 / (2^19 4^5) = 2^-26,
  // and the even powers keep every m-term rational.
  const mpfr_prec_t p = 96;
  Bounds raw{BigFloat::of(2L, p), sqrt(BigFloat::of(2L, p), MPFR_RNDD, p),
             BigFloat::of(1L, p), BigFloat::of(1L, p), BigFloat::of(1L, p)};
  BigFloat eps = epsilon_bound(raw, 4);
  BigRational closed(1, 1 << 26);
  CHECK(cmp(eps, closed) <= 0);
  CHECK(cmp(eps, closed * rational_from_string("0.999999999")) > 0);

  // The extraction path caps m at 1, which only shrinks the budget: the
  // certificate stays valid at 2^-29.
  std::vector<ComplexDisk> roots = unit_fourth_roots(96);
  std::vector<BigRational> coeffs{BigRational(0), BigRational(0), BigRational(0),
                                  BigRational(-1)};
  PrecisionPlan plan = make_plan(roots, coeffs);
  CHECK(cmp(plan.epsilon, BigRational(1, 1 << 29)) == 0);
  CHECK(plan.certified_bits == 29);
  CHECK(plan.required_bits == 37);
}

TEST_CASE("budget is monotone in each bound") {
  Rng rng(501);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    double Mv = 1.0 + 9.0 * d(rng);
    double mv = 0.05 + 0.9 * d(rng);
    double Rv = 1.0 + 9.0 * d(rng);
    double rv = 0.05 + 0.9 * d(rng);
    double cv = 1.0 + 1000.0 * d(rng);
    int n = 1 + static_cast<int>(6 * d(rng));
    const mpfr_prec_t p = 96;
    Bounds base{BigFloat::of(Mv, p), BigFloat::of(mv, p), BigFloat::of(Rv, p),
                BigFloat::of(rv, p), BigFloat::of(cv, p)};
    BigFloat eps = epsilon_bound(base, n);

    Bounds worseM = base;
    worseM.M = BigFloat::of(Mv * 1.5, p);
    CHECK(cmp(epsilon_bound(worseM, n), eps) <= 0);

    Bounds worsem = base;
    worsem.m = BigFloat::of(mv * 0.5, p);
    CHECK(cmp(epsilon_bound(worsem, n), eps) <= 0);

    Bounds worseR = base;
    worseR.R = BigFloat::of(Rv * 2.0, p);
    CHECK(cmp(epsilon_bound(worseR, n), eps) <= 0);

    Bounds worser = base;
    worser.r = BigFloat::of(rv * 0.5, p);
    CHECK(cmp(epsilon_bound(worser, n), eps) <= 0);

    Bounds worsec = base;
    worsec.c = BigFloat::of(cv * 3.0, p);
    CHECK(cmp(epsilon_bound(worsec, n), eps) <= 0);

    CHECK(cmp(epsilon_bound(base, n + 1), eps) <= 0);
  }
}

TEST_CASE("bounds are invariant under an exact unit rotation") {
  // (3/5 + 4/5 i) has unit modulus and stays rational
  Rng rng(502);
  for (int trial = 0; trial < 20; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 6)(rng);
    std::set<BigRational> seen;
    std::vector<std::pair<BigRational, BigRational>> pts;
    while (static_cast<int>(pts.size()) < n) {
      BigRational re = testing::random_in_annulus(rng, 0.5, 4.0);
      if (seen.insert(re).second) pts.emplace_back(re, BigRational(0));
    }
    const mpfr_prec_t p = 128;
    std::vector<ComplexDisk> orig, rot;
    BigRational c3(3, 5), c4(4, 5);
    for (auto& [re, im] : pts) {
      orig.push_back(ComplexDisk::of_rational(re, im, BigRational(0), p));
      rot.push_back(ComplexDisk::of_rational(c3 * re - c4 * im, c4 * re + c3 * im,
                                             BigRational(0), p));
    }
    Bounds a = extract_bounds(orig, {});
    Bounds b = extract_bounds(rot, {});
    BigFloat tol = BigFloat::pow2(-80, p);
    CHECK(cmp(abs(sub(a.M, b.M, MPFR_RNDN, p)), tol) <= 0);
    CHECK(cmp(abs(sub(a.m, b.m, MPFR_RNDN, p)), tol) <= 0);
    CHECK(cmp(abs(sub(a.R, b.R, MPFR_RNDN, p)), tol) <= 0);
    CHECK(cmp(abs(sub(a.r, b.r, MPFR_RNDN, p)), tol) <= 0);
  }
}

}  // TEST_SUITE
