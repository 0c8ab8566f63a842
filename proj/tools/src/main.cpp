// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"certified root-multiplicity recovery from leading coefficients"};
  app.require_subcommand(1);

  std::string problem_path, result_path, out_path;
  rootmult::cli::SolveOptions solve_opt;
  bool plan_json = false;

  CLI::App* plan = app.add_subcommand("plan", "estimate the precision budget");
  plan->add_option("problem", problem_path, "problem JSON file")->required();
  plan->add_flag("--json", plan_json, "machine-readable output");

  CLI::App* solve = app.add_subcommand("solve", "recover the multiplicities");
  solve->add_option("problem", problem_path, "problem JSON file")->required();
  long prec_flag = 0;
  solve->add_option("--precision-bits", prec_flag, "working precision (disk mode)");
  solve->add_flag("--retry-doubling", solve_opt.retry_doubling,
                  "double the precision after an ambiguous result, up to the cap");
  solve->add_flag("--json", solve_opt.json_output, "machine-readable output");
  std::string solve_out;
  solve->add_option("-o,--output", solve_out, "write the result JSON here");

  CLI::App* verify = app.add_subcommand("verify", "check a result against its problem");
  verify->add_option("problem", problem_path, "problem JSON file")->required();
  verify->add_option("result", result_path, "result JSON file")->required();

  CLI::App* plot = app.add_subcommand("plot", "draw the spectrum as an SVG scatter");
  plot->add_option("result", result_path, "result JSON file")->required();
  plot->add_option("-o,--output", out_path, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  if (plan->parsed()) {
    return rootmult::cli::cmd_plan(problem_path, plan_json, std::cout, std::cerr);
  }
  if (solve->parsed()) {
    if (prec_flag > 0) solve_opt.precision_bits = prec_flag;
    if (!solve_out.empty()) solve_opt.out_path = solve_out;
    return rootmult::cli::cmd_solve(problem_path, solve_opt, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    return rootmult::cli::cmd_verify(problem_path, result_path, std::cout, std::cerr);
  }
  return rootmult::cli::cmd_plot(result_path, out_path, std::cout, std::cerr);
}
