// SPDX-License-Identifier: Apache-2.0
#include "rootmult/newton.hpp"

#include <cstddef>
#include <stdexcept>

namespace rootmult {

std::vector<BigRational> power_sums_from_coeffs(std::span<const BigRational> c) {
  const std::size_t k = c.size();
  std::vector<BigRational> p;
  p.reserve(k);
  for (std::size_t j = 1; j <= k; ++j) {
    BigRational s = -static_cast<long>(j) * c[j - 1];
    for (std::size_t i = 1; i < j; ++i) s -= c[j - i - 1] * p[i - 1];
    p.push_back(std::move(s));
  }
  return p;
}

std::vector<BigRational> coeffs_from_power_sums(std::span<const BigRational> p) {
  const std::size_t k = p.size();
  std::vector<BigRational> c;
  c.reserve(k);
  for (std::size_t j = 1; j <= k; ++j) {
    BigRational s = p[j - 1];  // the i = j term has c_0 = 1
    for (std::size_t i = 1; i < j; ++i) s += c[j - i - 1] * p[i - 1];
    c.push_back(s / BigRational(-static_cast<long>(j)));
  }
  return c;
}

std::vector<BigRational> power_sums_of_poly_roots(const MonicPoly& q, long j_max) {
  if (j_max < 1) throw std::invalid_argument("j_max must be >= 1");
  if (q.truncated()) throw std::invalid_argument("need the full polynomial");
  std::vector<BigRational> padded = q.coeffs();
  padded.resize(static_cast<std::size_t>(j_max), BigRational(0));
  return power_sums_from_coeffs(padded);
}

}  // namespace rootmult
