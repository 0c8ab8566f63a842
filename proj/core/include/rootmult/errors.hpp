// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootmult {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A disk operation required the disk to exclude the origin and it did not
// (or could not be certified to).
struct DiskContainsZero : Error {
  using Error::Error;
};

// Two roots coincide: equal exact values, or disks that cannot be certified
// disjoint. Distinct roots are a precondition of every inversion here.
struct RepeatedRoot : Error {
  using Error::Error;
};

// An exact root is zero where a nonzero root is required.
struct ZeroRoot : Error {
  using Error::Error;
};

// The linear system has no unique solution.
struct MatrixSingular : Error {
  using Error::Error;
};

// The exact solve produced a vector that is not made of positive integers.
struct NonIntegralSolution : Error {
  using Error::Error;
};

// A snapped multiplicity came out below 1, or the zero-root count went
// negative; the supplied root data is inconsistent with the coefficients.
struct NegativeMultiplicity : Error {
  using Error::Error;
};

// A result disk does not trap exactly one integer on the real axis (or its
// imaginary range excludes 0). Carries what the caller needs to retry.
struct AmbiguousDisk : Error {
  AmbiguousDisk(std::string msg, std::size_t index, double diameter,
                long recommended_bits)
      : Error(std::move(msg)), index(index), diameter(diameter),
        recommended_bits(recommended_bits) {}
  std::size_t index = 0;
  double diameter = 0.0;
  long recommended_bits = 0;
};

// Input disks are too wide for the requested diagnostic (radius >= m/4).
struct PrecisionTooCoarse : Error {
  using Error::Error;
};

// A codegree that the substitution y = x^s must skip carries a nonzero
// coefficient; the spectrum is not s-fold symmetric.
struct NonZeroSkippedCoefficient : Error {
  NonZeroSkippedCoefficient(std::string msg, std::size_t codegree)
      : Error(std::move(msg)), codegree(codegree) {}
  std::size_t codegree = 0;
};

}  // namespace rootmult
