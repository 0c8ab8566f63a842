// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rootmult/poly.hpp"
#include "rootmult/rational.hpp"

namespace rootmult {

struct VerificationReport {
  bool coefficients_match = false;
  // 1-based codegree of the first mismatch, when any.
  std::optional<std::size_t> first_mismatch;
  std::optional<bool> degree_match;
  std::vector<BigRational> reconstructed;

  bool all_ok() const {
    return coefficients_match && degree_match.value_or(true);
  }
};

// Independent confirmation of a multiplicity vector: rebuilds the leading
// coefficients from the factor power sums (O(k^2) rational work regardless
// of the total degree) and compares entrywise; checks the degree identity
// degree = degree_scale * sum(m_i deg q_i) + m0 when degree and m0 are given.
// Mismatches are report content, never errors.
VerificationReport verify_multiplicities(std::span<const MonicPoly> factors,
                                         std::span<const long> m,
                                         std::span<const BigRational> coefficients,
                                         std::optional<long> degree = std::nullopt,
                                         std::optional<long> m0 = std::nullopt,
                                         long degree_scale = 1);

}  // namespace rootmult
