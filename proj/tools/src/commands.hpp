// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace rootmult::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;         // inconsistent input data
inline constexpr int kParse = 2;           // malformed file / violated invariants
inline constexpr int kPrecisionSpent = 3;  // ambiguous result, precision exhausted
inline constexpr int kSingular = 4;        // power-sum system singular
inline constexpr int kVerifyFailed = 5;

struct SolveOptions {
  std::optional<long> precision_bits;
  bool retry_doubling = false;
  bool json_output = false;
  std::optional<std::string> out_path;
  long retry_cap_bits = 1048576;
};

int cmd_plan(const std::string& problem_path, bool json_output, std::ostream& out,
             std::ostream& err);
int cmd_solve(const std::string& problem_path, const SolveOptions& opt,
              std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& problem_path, const std::string& result_path,
               std::ostream& out, std::ostream& err);
int cmd_plot(const std::string& result_path, const std::string& out_path,
             std::ostream& out, std::ostream& err);

}  // namespace rootmult::cli
