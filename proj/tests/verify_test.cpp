// SPDX-License-Identifier: Apache-2.0
#include "rootmult/verify.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "rootmult/errors.hpp"
#include "rootmult/solver.hpp"
#include "support/datasets.hpp"
#include "support/test_support.hpp"

using namespace rootmult;
using testing::Rng;

TEST_SUITE("verify") {

TEST_CASE("448-degree sample verifies against its published prefix") {
  std::vector<MonicPoly> factors = testing::rowling_factors();
  std::vector<long> m(std::begin(testing::kRowlingMults), std::end(testing::kRowlingMults));
  VerificationReport rep = verify_multiplicities(
      factors, m, testing::rowling_compressed_coeffs(), testing::kRowlingDegreeX,
      testing::kRowlingM0, 3);
  CHECK(rep.coefficients_match);
  CHECK(!rep.first_mismatch.has_value());
  CHECK(rep.degree_match.value());
}

TEST_CASE("53248-degree sample verifies all sixteen coefficients") {
  std::vector<MonicPoly> factors = testing::hummingbird_factors();
  std::vector<long> m(std::begin(testing::kHummingbirdMults),
                      std::end(testing::kHummingbirdMults));
  VerificationReport rep = verify_multiplicities(
      factors, m, testing::hummingbird_compressed_coeffs(),
      testing::kHummingbirdDegreeX, testing::kHummingbirdM0, 3);
  CHECK(rep.coefficients_match);
  CHECK(rep.degree_match.value());
}

TEST_CASE("any single-coordinate perturbation is rejected") {
  std::vector<MonicPoly> factors = testing::rowling_factors();
  std::vector<BigRational> coeffs = testing::rowling_compressed_coeffs();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (long delta : {-1L, 1L}) {
      std::vector<long> m(std::begin(testing::kRowlingMults),
                          std::end(testing::kRowlingMults));
      m[i] += delta;
      VerificationReport rep = verify_multiplicities(factors, m, coeffs);
      CHECK(!rep.coefficients_match);
      CHECK(rep.first_mismatch.value() <= coeffs.size());
    }
  }
}

TEST_CASE("empty factor list verifies a pure power of x") {
  std::vector<BigRational> zeros(4, BigRational(0));
  VerificationReport rep =
      verify_multiplicities({}, {}, zeros, 17, 17);
  CHECK(rep.coefficients_match);
  CHECK(rep.degree_match.value());

  VerificationReport bad = verify_multiplicities({}, {}, zeros, 17, 16);
  CHECK(!bad.degree_match.value());
}

TEST_CASE("verification agrees with the independent expansion oracle") {
  Rng rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    // a few distinct linear/quadratic factors with irreducible quadratics
    int t = std::uniform_int_distribution<int>(1, 5)(rng);
    std::set<std::vector<BigRational>> seen;
    std::vector<MonicPoly> factors;
    std::vector<long> mults;
    while (static_cast<int>(factors.size()) < t) {
      std::vector<BigRational> c;
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
        c = {testing::random_rational(rng, 8, 3)};
        if (c[0] == 0) continue;
      } else {
        // x^2 + bx + p with b^2 - 4p < 0 keeps it irreducible and nonzero at 0
        long b = std::uniform_int_distribution<long>(-4, 4)(rng);
        long p = std::uniform_int_distribution<long>(b * b / 4 + 1, b * b / 4 + 9)(rng);
        c = {BigRational(b), BigRational(p)};
      }
      if (seen.insert(c).second) {
        factors.emplace_back(c);
        mults.push_back(std::uniform_int_distribution<long>(1, 40)(rng));
      }
    }

    std::vector<BigRational> full = testing::expand_factors(factors, mults);
    long degree = static_cast<long>(full.size());
    std::size_t k = std::min<std::size_t>(full.size(), factors.size() + 3);
    std::vector<BigRational> prefix(full.begin(), full.begin() + static_cast<long>(k));

    VerificationReport rep =
        verify_multiplicities(factors, mults, prefix, degree, 0);
    CHECK(rep.coefficients_match);
    CHECK(rep.degree_match.value());
    CHECK(rep.reconstructed == prefix);

    // solve from the first t coefficients, then verify the result end to end
    // (a singular power-sum matrix is a legitimate outcome for some factor
    // sets; uniqueness only holds when it is non-singular)
    PolyProblem pr;
    pr.coefficients = prefix;
    pr.degree = degree;
    pr.roots = FactorRoots{factors};
    try {
      MultiplicityResult res = solve_exact(pr);
      CHECK(res.multiplicities == mults);
      VerificationReport again = verify_multiplicities(
          factors, res.multiplicities, prefix, degree, res.m0);
      CHECK(again.all_ok());
    } catch (const MatrixSingular&) {
    }
  }
}

}  // TEST_SUITE
