// SPDX-License-Identifier: Apache-2.0
#include "rootmult/solver.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "rootmult/errors.hpp"
#include "rootmult/linsolve.hpp"
#include "rootmult/matrix.hpp"
#include "rootmult/newton.hpp"
#include "rootmult/planner.hpp"
#include "rootmult/vander.hpp"

namespace rootmult {

namespace {

// Disk enclosure of an exact rational, radius = representation error only.
ComplexDisk disk_of_exact(const BigRational& v, mpfr_prec_t p) {
  return ComplexDisk::of_rational(v, BigRational(0), BigRational(0), p);
}

long checked_m0(long degree, long scale, const std::vector<long>& m,
                std::span<const long> factor_degrees) {
  long sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i) sum += m[i] * factor_degrees[i];
  long m0 = degree - scale * sum;
  if (m0 < 0) {
    throw NegativeMultiplicity(
        "zero-root multiplicity came out negative (degree " + std::to_string(degree) +
        " < " + std::to_string(scale * sum) + "); the root data is inconsistent");
  }
  return m0;
}

}  // namespace

long snap_to_integer(const ComplexDisk& disk) {
  const mpfr_prec_t p = std::max<mpfr_prec_t>(disk.prec(), 64);
  const Complex& c = disk.center();
  const BigFloat& r = disk.radius();

  BigFloat im_lo = sub(c.im, r, MPFR_RNDD, p);
  BigFloat im_hi = add(c.im, r, MPFR_RNDU, p);
  if (im_lo.sgn() > 0 || im_hi.sgn() < 0) {
    throw AmbiguousDisk("imaginary range of the result disk excludes 0", 0,
                        diameter(disk).to_double(MPFR_RNDU), 0);
  }

  BigFloat re_lo = sub(c.re, r, MPFR_RNDD, p);
  BigFloat re_hi = add(c.re, r, MPFR_RNDU, p);
  BigFloat lo_int = ceil(re_lo);
  BigFloat hi_int = floor(re_hi);
  int c01 = cmp(lo_int, hi_int);
  if (c01 != 0) {
    throw AmbiguousDisk(
        c01 > 0 ? "result disk traps no integer" : "result disk traps several integers",
        0, diameter(disk).to_double(MPFR_RNDU), 0);
  }
  if (!lo_int.fits_long()) throw Error("multiplicity overflows a machine integer");
  return lo_int.to_long();
}

std::vector<BigRational> substitute_codegrees(std::span<const BigRational> coeffs,
                                              long s) {
  if (s < 1) throw std::invalid_argument("substitution exponent must be >= 1");
  if (s == 1) return {coeffs.begin(), coeffs.end()};
  if (coeffs.size() % static_cast<std::size_t>(s) != 0) {
    throw std::invalid_argument("coefficient list length must be a multiple of s");
  }
  std::vector<BigRational> out;
  out.reserve(coeffs.size() / static_cast<std::size_t>(s));
  for (std::size_t i = 1; i <= coeffs.size(); ++i) {
    if (i % static_cast<std::size_t>(s) == 0) {
      out.push_back(coeffs[i - 1]);
    } else if (coeffs[i - 1] != 0) {
      throw NonZeroSkippedCoefficient(
          "codegree " + std::to_string(i) + " must vanish under y = x^" +
              std::to_string(s) + " but is " + to_string(coeffs[i - 1]),
          i);
    }
  }
  return out;
}

MultiplicityResult solve_numeric(const PolyProblem& problem, mpfr_prec_t precision_bits) {
  const auto* dr = std::get_if<DiskRoots>(&problem.roots);
  if (dr == nullptr) throw std::invalid_argument("solve_numeric needs disk roots");
  const std::size_t k = dr->disks.size();
  if (k == 0) throw std::invalid_argument("need at least one root disk");
  if (problem.coefficients.size() < k) {
    throw std::invalid_argument("need at least one coefficient per distinct root");
  }
  const mpfr_prec_t wp = std::max<mpfr_prec_t>(precision_bits, 64);

  std::vector<ComplexDisk> roots;
  roots.reserve(k);
  for (const ComplexDisk& d : dr->disks) roots.push_back(d.widen_precision(wp));

  std::span<const BigRational> coeffs(problem.coefficients.data(), k);
  // Also certifies pairwise disjointness and zero exclusion.
  PrecisionPlan plan = make_plan(roots, coeffs);

  std::vector<BigRational> p = power_sums_from_coeffs(coeffs);

  StructuredInverse<ComplexDisk> inv0 = v0_inverse(roots);

  std::vector<ComplexDisk> pd;
  pd.reserve(k);
  for (const BigRational& pj : p) pd.push_back(disk_of_exact(pj, wp));

  MultiplicityResult res;
  res.certified = true;
  res.multiplicities.reserve(k);
  res.residual_diameters.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    ComplexDisk acc = inv0.product(i, 0) * pd[0];
    for (std::size_t j = 1; j < k; ++j) acc = acc + inv0.product(i, j) * pd[j];
    res.residual_diameters.push_back(diameter(acc).to_double(MPFR_RNDU));
    long mi;
    try {
      mi = snap_to_integer(acc);
    } catch (const AmbiguousDisk& e) {
      throw AmbiguousDisk(std::string(e.what()) + " (root index " + std::to_string(i + 1) +
                              "); rerun with more precise roots",
                          i, e.diameter, plan.required_bits);
    }
    if (mi < 1) {
      throw NegativeMultiplicity("root " + std::to_string(i + 1) +
                                 " snapped to " + std::to_string(mi) +
                                 "; a listed root must have multiplicity >= 1");
    }
    res.multiplicities.push_back(mi);
  }

  if (problem.degree) {
    std::vector<long> ones(k, 1);
    res.m0 = checked_m0(*problem.degree, problem.degree_scale, res.multiplicities, ones);
  }
  return res;
}

MultiplicityResult solve_exact(const PolyProblem& problem) {
  const auto* fr = std::get_if<FactorRoots>(&problem.roots);
  if (fr == nullptr) throw std::invalid_argument("solve_exact needs factor roots");
  const std::size_t t = fr->factors.size();
  if (t == 0) throw std::invalid_argument("need at least one factor");
  if (problem.coefficients.size() < t) {
    throw std::invalid_argument("need at least one coefficient per factor");
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (fr->factors[i].constant_term() == 0) {
      throw ZeroRoot("factor " + std::to_string(i + 1) + " is divisible by x");
    }
  }

  std::span<const BigRational> coeffs(problem.coefficients.data(), t);
  std::vector<BigRational> p = power_sums_from_coeffs(coeffs);

  // column j holds the power sums of factor j's roots
  Matrix<BigRational> v(t, t, BigRational(0));
  for (std::size_t j = 0; j < t; ++j) {
    std::vector<BigRational> s =
        power_sums_of_poly_roots(fr->factors[j], static_cast<long>(t));
    for (std::size_t i = 0; i < t; ++i) v(i, j) = s[i];
  }

  std::vector<BigRational> x = exact_solve(v, p);

  MultiplicityResult res;
  res.certified = true;
  res.multiplicities.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    if (x[i].get_den() != 1 || x[i] < 1) {
      throw NonIntegralSolution("factor " + std::to_string(i + 1) +
                                " solves to " + to_string(x[i]) +
                                ", not a positive integer; the inputs are inconsistent");
    }
    if (!x[i].get_num().fits_slong_p()) {
      throw Error("multiplicity overflows a machine integer");
    }
    res.multiplicities.push_back(x[i].get_num().get_si());
  }

  if (problem.degree) {
    std::vector<long> degs(t);
    for (std::size_t i = 0; i < t; ++i) degs[i] = fr->factors[i].degree();
    res.m0 = checked_m0(*problem.degree, problem.degree_scale, res.multiplicities, degs);
  }
  return res;
}

}  // namespace rootmult
