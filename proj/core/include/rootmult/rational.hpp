// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rootmult {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "p/q", integer, or decimal/scientific notation ("-1.25e3") as an
// exact rational. No rounding ever happens here; throws std::invalid_argument
// on malformed input.
BigRational rational_from_string(std::string_view s);

// Canonical rendering: integer when the denominator is 1, "p/q" otherwise.
std::string to_string(const BigRational& q);

}  // namespace rootmult
