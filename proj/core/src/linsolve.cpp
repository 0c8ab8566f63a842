// SPDX-License-Identifier: Apache-2.0
#include "rootmult/linsolve.hpp"

#include <cstddef>
#include <stdexcept>

#include "rootmult/errors.hpp"

namespace rootmult {

std::vector<BigRational> exact_solve(const Matrix<BigRational>& m,
                                     std::span<const BigRational> b) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("exact_solve needs a square matrix");
  if (b.size() != n) throw std::invalid_argument("dimension mismatch");
  if (n == 0) return {};

  // Augmented integer matrix: scale each row by the lcm of its denominators.
  Matrix<BigInt> a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt scale(1);
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      BigRational v = m(i, j) * BigRational(scale);
      a(i, j) = v.get_num();
    }
    BigRational v = b[i] * BigRational(scale);
    a(i, n) = v.get_num();
  }

  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) throw MatrixSingular("matrix is singular");
    a.swap_rows(k, piv);

    const BigInt pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        // Bareiss step: the division is exact
        a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  if (a(n - 1, n - 1) == 0) throw MatrixSingular("matrix is singular");

  std::vector<BigRational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigRational s(a(i, n));
    for (std::size_t j = i + 1; j < n; ++j) s -= BigRational(a(i, j)) * x[j];
    x[i] = s / BigRational(a(i, i));
    x[i].canonicalize();
  }
  return x;
}

}  // namespace rootmult
