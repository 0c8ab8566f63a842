// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rootmult/rational.hpp"
#include "rootmult/solver.hpp"

namespace rootmult::cli {

// Problem-file syntax or schema violation; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoefficientEntry {
  long codegree = 0;
  BigRational value;
};

struct DiskEntry {
  // kept as exact strings so results round-trip byte for byte
  std::string re, im, radius;
};

// Mirror of the on-disk problem document. Every number is a string; unknown
// keys are rejected.
struct ProblemFile {
  std::string mode;  // "disks" | "factors"
  std::vector<CoefficientEntry> coefficients;
  std::optional<long> degree;
  long substitution = 1;
  std::vector<DiskEntry> disks;                         // disks mode
  std::vector<std::vector<std::string>> factor_coeffs;  // factors mode
  std::optional<long> precision_bits;

  nlohmann::json to_json() const;
};

ProblemFile load_problem(const std::string& path);
ProblemFile problem_from_json(const nlohmann::json& j);

// Dense c_1..c_max list (zeros filled), before substitution.
std::vector<BigRational> dense_coefficients(const ProblemFile& pf);

// Applies the substitution and builds the solver input at `prec` working
// precision for disk roots. Throws ParseError / NonZeroSkippedCoefficient on
// invariant violations.
PolyProblem build_problem(const ProblemFile& pf, mpfr_prec_t prec);

struct ResultFile {
  ProblemFile problem;
  std::vector<long> multiplicities;
  std::optional<long> m0;
  bool certified = false;
  long precision_bits = 0;  // 0 on the exact path
  nlohmann::json plan;          // object or null
  nlohmann::json verification;  // object or null

  nlohmann::json to_json() const;
};

ResultFile load_result(const std::string& path);
std::string serialize_result(const ResultFile& r);

}  // namespace rootmult::cli
