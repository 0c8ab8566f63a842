// SPDX-License-Identifier: Apache-2.0
#include "rootmult/poly.hpp"

#include <stdexcept>
#include <utility>

namespace rootmult {

MonicPoly::MonicPoly(std::vector<BigRational> proper_coeffs)
    : coeffs_(std::move(proper_coeffs)),
      degree_(static_cast<long>(coeffs_.size())) {
  if (coeffs_.empty()) throw std::invalid_argument("monic polynomial needs degree >= 1");
}

MonicPoly::MonicPoly(std::vector<BigRational> proper_coeffs, long degree)
    : coeffs_(std::move(proper_coeffs)), degree_(degree) {
  if (degree_ < 1) throw std::invalid_argument("monic polynomial needs degree >= 1");
  if (static_cast<long>(coeffs_.size()) > degree_) {
    throw std::invalid_argument("more coefficients than the stated degree");
  }
}

const BigRational& MonicPoly::constant_term() const {
  if (truncated()) throw std::logic_error("constant term of a truncated polynomial");
  return coeffs_.back();
}

BigRational MonicPoly::eval(const BigRational& x) const {
  if (truncated()) throw std::logic_error("evaluating a truncated polynomial");
  BigRational acc(1);
  for (const BigRational& c : coeffs_) acc = acc * x + c;
  return acc;
}

}  // namespace rootmult
