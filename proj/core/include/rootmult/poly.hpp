// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rootmult/rational.hpp"

namespace rootmult {

// Monic polynomial held by its proper coefficients in codegree order:
// coeffs()[j] is the codegree-(j+1) coefficient, the leading 1 is implicit.
// A truncated polynomial stores fewer coefficients than its degree.
class MonicPoly {
 public:
  explicit MonicPoly(std::vector<BigRational> proper_coeffs);
  MonicPoly(std::vector<BigRational> proper_coeffs, long degree);

  long degree() const { return degree_; }
  bool truncated() const { return degree_ != static_cast<long>(coeffs_.size()); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  // Constant term; requires the full polynomial.
  const BigRational& constant_term() const;
  // Horner evaluation; requires the full polynomial.
  BigRational eval(const BigRational& x) const;

 private:
  std::vector<BigRational> coeffs_;
  long degree_;
};

}  // namespace rootmult
