// SPDX-License-Identifier: Apache-2.0
#include "rootmult/verify.hpp"

#include <cstddef>
#include <stdexcept>

#include "rootmult/newton.hpp"

namespace rootmult {

VerificationReport verify_multiplicities(std::span<const MonicPoly> factors,
                                         std::span<const long> m,
                                         std::span<const BigRational> coefficients,
                                         std::optional<long> degree,
                                         std::optional<long> m0,
                                         long degree_scale) {
  if (factors.size() != m.size()) {
    throw std::invalid_argument("factor and multiplicity counts differ");
  }
  const long k = static_cast<long>(coefficients.size());

  VerificationReport rep;
  if (k > 0) {
    std::vector<BigRational> p(static_cast<std::size_t>(k), BigRational(0));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::vector<BigRational> s = power_sums_of_poly_roots(factors[i], k);
      for (long j = 0; j < k; ++j) p[j] += BigRational(m[i]) * s[j];
    }
    rep.reconstructed = coeffs_from_power_sums(p);
  }
  rep.coefficients_match = true;
  for (long j = 0; j < k; ++j) {
    if (rep.reconstructed[j] != coefficients[j]) {
      rep.coefficients_match = false;
      rep.first_mismatch = static_cast<std::size_t>(j + 1);
      break;
    }
  }

  if (degree && m0) {
    long sum = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) sum += m[i] * factors[i].degree();
    rep.degree_match = (degree_scale * sum + *m0 == *degree);
  }
  return rep;
}

}  // namespace rootmult
