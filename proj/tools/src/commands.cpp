// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <vector>

#include "approx_roots.hpp"
#include "problem_io.hpp"
#include "rootmult/errors.hpp"
#include "rootmult/newton.hpp"
#include "rootmult/planner.hpp"
#include "rootmult/solver.hpp"
#include "rootmult/vander.hpp"
#include "rootmult/verify.hpp"
#include "svg.hpp"

namespace rootmult::cli {

namespace {

using nlohmann::json;

constexpr mpfr_prec_t kEstimatePrec = 256;

std::vector<MonicPoly> parse_factors(const ProblemFile& pf) {
  std::vector<MonicPoly> out;
  out.reserve(pf.factor_coeffs.size());
  for (const auto& f : pf.factor_coeffs) {
    std::vector<BigRational> c;
    c.reserve(f.size());
    for (const std::string& s : f) c.push_back(rational_from_string(s));
    out.emplace_back(std::move(c));
  }
  return out;
}

// Root disks to feed the planner: given disks as-is, or tight enclosures of
// numerically approximated factor roots (estimation only, not certified).
std::vector<ComplexDisk> planning_disks(const ProblemFile& pf) {
  std::vector<ComplexDisk> disks;
  if (pf.mode == "disks") {
    for (const DiskEntry& d : pf.disks) {
      disks.push_back(ComplexDisk::of_rational(rational_from_string(d.re),
                                               rational_from_string(d.im),
                                               rational_from_string(d.radius),
                                               kEstimatePrec));
    }
    return disks;
  }
  BigFloat slack = BigFloat::pow2(-192, kEstimatePrec);
  for (const MonicPoly& q : parse_factors(pf)) {
    for (Complex& z : approximate_roots(q, kEstimatePrec)) {
      disks.push_back(ComplexDisk{std::move(z), slack});
    }
  }
  return disks;
}

json plan_to_json(const PrecisionPlan& plan) {
  json j;
  j["M"] = plan.bounds.M.str(12);
  j["m"] = plan.bounds.m.str(12);
  j["R"] = plan.bounds.R.str(12);
  j["r"] = plan.bounds.r.str(12);
  j["c"] = plan.bounds.c.str(12);
  j["n"] = std::to_string(plan.n);
  j["epsilon"] = plan.epsilon.str(8);
  j["certified_bits"] = std::to_string(plan.certified_bits);
  j["certified_digits"] = std::to_string(certified_digits(plan.epsilon));
  j["required_bits"] = std::to_string(plan.required_bits);
  return j;
}

void print_plan(const PrecisionPlan& plan, std::ostream& out) {
  out << "root bounds        M = " << plan.bounds.M.str(6)
      << ", m = " << plan.bounds.m.str(6) << ", R = " << plan.bounds.R.str(6)
      << ", r = " << plan.bounds.r.str(6) << "\n";
  out << "max coefficient    c = " << plan.bounds.c.str(6) << "\n";
  out << "distinct roots     n = " << plan.n << "\n";
  out << "radius budget      eps = " << plan.epsilon.str(6) << "\n";
  out << "precision needed   " << plan.certified_bits << " bits ("
      << certified_digits(plan.epsilon) << " decimal digits)\n";
  out << "recommendation     " << plan.required_bits
      << " bits of working precision per root\n";
}

struct LoadedProblem {
  ProblemFile file;
  PolyProblem problem;
};

LoadedProblem load(const std::string& path, mpfr_prec_t prec) {
  LoadedProblem lp{load_problem(path), {}};
  lp.problem = build_problem(lp.file, prec);
  return lp;
}

int report_parse_error(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return kParse;
}

json verification_to_json(const VerificationReport& rep, std::size_t checked) {
  json v;
  v["coefficients_checked"] = std::to_string(checked);
  v["coefficients_match"] = rep.coefficients_match;
  if (rep.first_mismatch) v["first_mismatch"] = std::to_string(*rep.first_mismatch);
  if (rep.degree_match) v["degree_match"] = *rep.degree_match;
  return v;
}

void write_result(const ResultFile& result, const SolveOptions& opt, std::ostream& out) {
  if (opt.out_path) {
    std::ofstream f(*opt.out_path);
    f << serialize_result(result);
  }
  if (opt.json_output) {
    out << serialize_result(result);
    return;
  }
  out << "multiplicities:";
  for (long m : result.multiplicities) out << " " << m;
  out << "\n";
  if (result.m0) out << "m0 = " << *result.m0 << "\n";
  out << "certified: " << (result.certified ? "yes" : "no") << "\n";
  if (!result.verification.is_null()) {
    bool ok = result.verification["coefficients_match"].get<bool>();
    out << "verification: " << (ok ? "pass" : "FAIL") << " ("
        << result.verification["coefficients_checked"].get<std::string>()
        << " coefficients)\n";
  }
}

// s-th roots of y, for drawing the spectrum in the original variable.
std::vector<Complex> sth_roots(const Complex& y, long s, mpfr_prec_t p) {
  if (s == 1) return {y};
  BigFloat mag = hypot(y.re, y.im, MPFR_RNDN, p);
  BigFloat root_mag(p);
  mpfr_rootn_ui(root_mag.raw(), mag.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
  BigFloat theta(p);
  mpfr_atan2(theta.raw(), y.im.raw(), y.re.raw(), MPFR_RNDN);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(s));
  BigFloat two_pi(p);
  mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
  two_pi = mul_pow2(two_pi, 1);
  for (long j = 0; j < s; ++j) {
    BigFloat ang = div_long(add(theta, mul_long(two_pi, j, MPFR_RNDN, p), MPFR_RNDN, p),
                            s, MPFR_RNDN, p);
    BigFloat c(p), sn(p);
    mpfr_sin_cos(sn.raw(), c.raw(), ang.raw(), MPFR_RNDN);
    out.push_back(Complex{mul(root_mag, c, MPFR_RNDN, p), mul(root_mag, sn, MPFR_RNDN, p)});
  }
  return out;
}

}  // namespace

int cmd_plan(const std::string& problem_path, bool json_output, std::ostream& out,
             std::ostream& err) {
  try {
    ProblemFile pf = load_problem(problem_path);
    PolyProblem problem = build_problem(pf, kEstimatePrec);
    std::vector<ComplexDisk> disks = planning_disks(pf);
    PrecisionPlan plan = make_plan(disks, problem.coefficients);
    if (json_output) {
      out << plan_to_json(plan).dump(2) << "\n";
    } else {
      if (pf.mode == "factors") {
        out << "(factor roots approximated numerically for estimation)\n";
      }
      print_plan(plan, out);
    }
    return kOk;
  } catch (const Error& e) {
    return report_parse_error(e, err);
  } catch (const std::exception& e) {
    return report_parse_error(e, err);
  }
}

int cmd_solve(const std::string& problem_path, const SolveOptions& opt,
              std::ostream& out, std::ostream& err) {
  LoadedProblem lp;
  try {
    lp = load(problem_path, static_cast<mpfr_prec_t>(opt.precision_bits.value_or(256)));
  } catch (const std::exception& e) {
    return report_parse_error(e, err);
  }

  ResultFile result;
  result.problem = lp.file;

  if (lp.file.mode == "factors") {
    try {
      MultiplicityResult res = solve_exact(lp.problem);
      result.multiplicities = res.multiplicities;
      result.m0 = res.m0;
      result.certified = res.certified;

      std::vector<MonicPoly> factors = parse_factors(lp.file);
      VerificationReport rep = verify_multiplicities(
          factors, res.multiplicities, lp.problem.coefficients, lp.problem.degree,
          res.m0, lp.problem.degree_scale);
      result.verification = verification_to_json(rep, lp.problem.coefficients.size());
      write_result(result, opt, out);
      if (!rep.all_ok()) {
        err << "error: solution does not reproduce the full coefficient list\n";
        return kVerifyFailed;
      }
      return kOk;
    } catch (const MatrixSingular& e) {
      err << "error: " << e.what()
          << "; the multiplicities are not determined by these coefficients\n";
      return kSingular;
    } catch (const ZeroRoot& e) {
      return report_parse_error(e, err);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kFailure;
    }
  }

  // Disk path. Invariants (disjointness, zero exclusion) are checked at a
  // reference precision high enough to represent the input literals; the
  // working precision is a separate knob that the retry loop may double.
  long literal_len = 0;
  for (const DiskEntry& d : lp.file.disks) {
    literal_len = std::max<long>(literal_len, static_cast<long>(d.re.size()));
    literal_len = std::max<long>(literal_len, static_cast<long>(d.im.size()));
  }
  const long ref_prec =
      std::max({256L, 4 * literal_len + 32, opt.precision_bits.value_or(0),
                lp.file.precision_bits.value_or(0)});

  PrecisionPlan plan;
  try {
    PolyProblem reference = build_problem(lp.file, static_cast<mpfr_prec_t>(ref_prec));
    const auto& disks = std::get<DiskRoots>(reference.roots).disks;
    plan = make_plan(disks, {reference.coefficients.data(), disks.size()});
  } catch (const Error& e) {
    return report_parse_error(e, err);  // genuine overlap / zero containment
  }

  long prec = opt.precision_bits.value_or(
      lp.file.precision_bits.value_or(std::max(plan.required_bits, 64L)));
  result.plan = plan_to_json(plan);

  while (true) {
    try {
      // rebuild the disks at the working precision so rounding slack shrinks
      PolyProblem attempt = build_problem(lp.file, static_cast<mpfr_prec_t>(prec));
      MultiplicityResult res = solve_numeric(attempt, static_cast<mpfr_prec_t>(prec));
      result.multiplicities = res.multiplicities;
      result.m0 = res.m0;
      result.certified = res.certified;
      result.precision_bits = prec;
      write_result(result, opt, out);
      return kOk;
    } catch (const Error& e) {
      // ambiguity, or disks that this precision cannot even keep apart
      bool retryable = dynamic_cast<const AmbiguousDisk*>(&e) != nullptr ||
                       dynamic_cast<const RepeatedRoot*>(&e) != nullptr ||
                       dynamic_cast<const DiskContainsZero*>(&e) != nullptr;
      if (!retryable) {
        err << "error: " << e.what() << "\n";
        return kFailure;
      }
      if (opt.retry_doubling && prec * 2 <= opt.retry_cap_bits) {
        prec *= 2;
        continue;
      }
      err << "error: insufficient working precision (" << prec << " bits): " << e.what()
          << "\n";
      err << "the plan recommends " << plan.required_bits
          << " bits and root radius below " << plan.epsilon.str(6) << "\n";
      return kPrecisionSpent;
    }
  }
}

int cmd_verify(const std::string& problem_path, const std::string& result_path,
               std::ostream& out, std::ostream& err) {
  ProblemFile pf;
  ResultFile rf;
  try {
    pf = load_problem(problem_path);
    rf = load_result(result_path);
  } catch (const std::exception& e) {
    return report_parse_error(e, err);
  }
  try {
    if (pf.mode != rf.problem.mode) {
      throw ParseError("problem and result files disagree on mode");
    }
    if (pf.mode != "factors") {
      throw ParseError("verification needs a factor-mode problem");
    }
    if (pf.factor_coeffs != rf.problem.factor_coeffs) {
      throw ParseError("result was produced from a different factor list");
    }
    PolyProblem problem = build_problem(pf, kEstimatePrec);
    if (rf.multiplicities.size() != pf.factor_coeffs.size()) {
      throw ParseError("result multiplicity count does not match the factor list");
    }

    VerificationReport rep = verify_multiplicities(
        parse_factors(pf), rf.multiplicities, problem.coefficients, problem.degree,
        rf.m0, problem.degree_scale);
    if (rep.all_ok()) {
      out << "verification passed: " << problem.coefficients.size()
          << " coefficients reproduced";
      if (rep.degree_match) out << ", degree identity holds";
      out << "\n";
      return kOk;
    }
    if (!rep.coefficients_match) {
      err << "verification FAILED at codegree " << *rep.first_mismatch << ": expected "
          << to_string(problem.coefficients[*rep.first_mismatch - 1]) << ", reconstructed "
          << to_string(rep.reconstructed[*rep.first_mismatch - 1]) << "\n";
    }
    if (rep.degree_match && !*rep.degree_match) {
      err << "verification FAILED: degree identity does not hold\n";
    }
    return kVerifyFailed;
  } catch (const ParseError& e) {
    return report_parse_error(e, err);
  } catch (const Error& e) {
    return report_parse_error(e, err);
  }
}

int cmd_plot(const std::string& result_path, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  ResultFile rf;
  try {
    rf = load_result(result_path);
  } catch (const std::exception& e) {
    return report_parse_error(e, err);
  }
  try {
    const mpfr_prec_t p = 128;
    std::vector<Marker> markers;
    std::vector<std::pair<Complex, long>> roots_y;

    if (rf.problem.mode == "disks") {
      if (rf.multiplicities.size() != rf.problem.disks.size()) {
        throw ParseError("result multiplicity count does not match the root list");
      }
      for (std::size_t i = 0; i < rf.problem.disks.size(); ++i) {
        const DiskEntry& d = rf.problem.disks[i];
        roots_y.emplace_back(
            Complex{BigFloat::of(rational_from_string(d.re), p, MPFR_RNDN),
                    BigFloat::of(rational_from_string(d.im), p, MPFR_RNDN)},
            rf.multiplicities[i]);
      }
    } else {
      std::vector<MonicPoly> factors = parse_factors(rf.problem);
      if (rf.multiplicities.size() != factors.size()) {
        throw ParseError("result multiplicity count does not match the factor list");
      }
      for (std::size_t i = 0; i < factors.size(); ++i) {
        for (Complex& z : approximate_roots(factors[i], p)) {
          roots_y.emplace_back(std::move(z), rf.multiplicities[i]);
        }
      }
    }

    for (auto& [y, m] : roots_y) {
      for (const Complex& x : sth_roots(y, rf.problem.substitution, p)) {
        markers.push_back(Marker{x.re.to_double(), x.im.to_double(), m, false});
      }
    }
    if (rf.m0 && *rf.m0 > 0) markers.push_back(Marker{0.0, 0.0, *rf.m0, true});

    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + out_path + "'");
    f << render_spectrum(std::move(markers));
    out << "wrote " << out_path << "\n";
    return kOk;
  } catch (const ParseError& e) {
    return report_parse_error(e, err);
  } catch (const Error& e) {
    return report_parse_error(e, err);
  }
}

}  // namespace rootmult::cli
