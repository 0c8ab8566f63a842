// SPDX-License-Identifier: Apache-2.0
#include "problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "rootmult/errors.hpp"

namespace rootmult::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

std::string str_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

long long_from_string(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) fail(std::string("'") + what + "' is not an integer: " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail(std::string("'") + what + "' is not an integer: " + s);
  }
}

BigRational rational_field(const std::string& s, const char* what) {
  try {
    return rational_from_string(s);
  } catch (const std::invalid_argument&) {
    fail(std::string("'") + what + "' is not an exact rational: " + s);
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return it.key() == k;
        }) == allowed.end()) {
      fail("unknown key '" + it.key() + "'");
    }
  }
}

}  // namespace

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) fail("problem document must be a JSON object");
  reject_unknown(j, {"mode", "coefficients", "degree", "substitution", "roots",
                     "precision_bits"});

  ProblemFile pf;
  pf.mode = str_field(j, "mode");
  if (pf.mode != "disks" && pf.mode != "factors") {
    fail("mode must be \"disks\" or \"factors\"");
  }

  const json& cj = field(j, "coefficients");
  if (!cj.is_array() || cj.empty()) fail("'coefficients' must be a nonempty array");
  std::set<long> seen;
  for (const json& e : cj) {
    if (!e.is_object()) fail("coefficient entries must be objects");
    reject_unknown(e, {"codegree", "value"});
    CoefficientEntry entry;
    entry.codegree = long_from_string(str_field(e, "codegree"), "codegree");
    if (entry.codegree < 1) fail("codegree indices must be positive");
    if (!seen.insert(entry.codegree).second) {
      fail("codegree " + std::to_string(entry.codegree) + " listed twice");
    }
    entry.value = rational_field(str_field(e, "value"), "value");
    pf.coefficients.push_back(std::move(entry));
  }

  if (j.contains("degree")) {
    pf.degree = long_from_string(str_field(j, "degree"), "degree");
    if (*pf.degree < 1) fail("degree must be positive");
  }
  if (j.contains("substitution")) {
    pf.substitution = long_from_string(str_field(j, "substitution"), "substitution");
    if (pf.substitution < 1) fail("substitution must be >= 1");
  }
  if (j.contains("precision_bits")) {
    pf.precision_bits = long_from_string(str_field(j, "precision_bits"), "precision_bits");
    if (*pf.precision_bits < 2) fail("precision_bits must be >= 2");
  }

  const json& rj = field(j, "roots");
  if (!rj.is_array() || rj.empty()) fail("'roots' must be a nonempty array");
  if (pf.mode == "disks") {
    for (const json& e : rj) {
      if (!e.is_object()) fail("disk entries must be objects");
      reject_unknown(e, {"re", "im", "radius"});
      DiskEntry d;
      d.re = str_field(e, "re");
      d.im = str_field(e, "im");
      d.radius = str_field(e, "radius");
      rational_field(d.re, "re");
      rational_field(d.im, "im");
      if (rational_field(d.radius, "radius") < 0) fail("radius must be nonnegative");
      pf.disks.push_back(std::move(d));
    }
  } else {
    for (const json& e : rj) {
      if (!e.is_array() || e.empty()) {
        fail("factor entries must be nonempty coefficient arrays");
      }
      std::vector<std::string> c;
      for (const json& v : e) {
        if (!v.is_string()) fail("factor coefficients must be strings");
        rational_field(v.get<std::string>(), "factor coefficient");
        c.push_back(v.get<std::string>());
      }
      pf.factor_coeffs.push_back(std::move(c));
    }
  }
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return problem_from_json(j);
}

json ProblemFile::to_json() const {
  json j;
  j["mode"] = mode;
  json cs = json::array();
  for (const CoefficientEntry& e : coefficients) {
    cs.push_back({{"codegree", std::to_string(e.codegree)},
                  {"value", to_string(e.value)}});
  }
  j["coefficients"] = cs;
  if (degree) j["degree"] = std::to_string(*degree);
  if (substitution != 1) j["substitution"] = std::to_string(substitution);
  if (precision_bits) j["precision_bits"] = std::to_string(*precision_bits);
  json rs = json::array();
  if (mode == "disks") {
    for (const DiskEntry& d : disks) {
      rs.push_back({{"re", d.re}, {"im", d.im}, {"radius", d.radius}});
    }
  } else {
    for (const auto& f : factor_coeffs) {
      json fc = json::array();
      for (const std::string& c : f) fc.push_back(c);
      rs.push_back(fc);
    }
  }
  j["roots"] = rs;
  return j;
}

std::vector<BigRational> dense_coefficients(const ProblemFile& pf) {
  long maxc = 0;
  for (const CoefficientEntry& e : pf.coefficients) maxc = std::max(maxc, e.codegree);
  // pad to a multiple of the substitution step
  if (pf.substitution > 1 && maxc % pf.substitution != 0) {
    maxc += pf.substitution - (maxc % pf.substitution);
  }
  std::vector<BigRational> dense(static_cast<std::size_t>(maxc), BigRational(0));
  for (const CoefficientEntry& e : pf.coefficients) {
    dense[static_cast<std::size_t>(e.codegree - 1)] = e.value;
  }
  return dense;
}

PolyProblem build_problem(const ProblemFile& pf, mpfr_prec_t prec) {
  PolyProblem p;
  p.coefficients = substitute_codegrees(dense_coefficients(pf), pf.substitution);
  p.degree = pf.degree;
  p.degree_scale = pf.substitution;

  if (pf.mode == "disks") {
    DiskRoots dr;
    for (const DiskEntry& d : pf.disks) {
      dr.disks.push_back(ComplexDisk::of_rational(rational_from_string(d.re),
                                                  rational_from_string(d.im),
                                                  rational_from_string(d.radius), prec));
    }
    if (p.coefficients.size() < dr.disks.size()) {
      fail("need at least one coefficient per root disk after substitution");
    }
    p.roots = std::move(dr);
  } else {
    FactorRoots fr;
    for (const auto& f : pf.factor_coeffs) {
      std::vector<BigRational> c;
      c.reserve(f.size());
      for (const std::string& s : f) c.push_back(rational_from_string(s));
      fr.factors.emplace_back(std::move(c));
    }
    if (p.coefficients.size() < fr.factors.size()) {
      fail("need at least one coefficient per factor after substitution");
    }
    p.roots = std::move(fr);
  }
  return p;
}

json ResultFile::to_json() const {
  json j;
  j["problem"] = problem.to_json();
  json ms = json::array();
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    ms.push_back({{"index", std::to_string(i + 1)},
                  {"multiplicity", std::to_string(multiplicities[i])}});
  }
  j["multiplicities"] = ms;
  if (m0) j["m0"] = std::to_string(*m0);
  j["certified"] = certified;
  j["precision_bits"] = std::to_string(precision_bits);
  if (!plan.is_null()) j["plan"] = plan;
  if (!verification.is_null()) j["verification"] = verification;
  return j;
}

std::string serialize_result(const ResultFile& r) { return r.to_json().dump(2) + "\n"; }

ResultFile load_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("result document must be a JSON object");
  reject_unknown(j, {"problem", "multiplicities", "m0", "certified", "precision_bits",
                     "plan", "verification"});
  ResultFile r;
  r.problem = problem_from_json(field(j, "problem"));
  const json& ms = field(j, "multiplicities");
  if (!ms.is_array()) fail("'multiplicities' must be an array");
  r.multiplicities.resize(ms.size(), 0);
  std::vector<bool> got(ms.size(), false);
  for (const json& e : ms) {
    if (!e.is_object()) fail("multiplicity entries must be objects");
    reject_unknown(e, {"index", "multiplicity"});
    long idx = long_from_string(str_field(e, "index"), "index");
    if (idx < 1 || idx > static_cast<long>(ms.size())) fail("multiplicity index out of range");
    if (got[static_cast<std::size_t>(idx - 1)]) fail("duplicate multiplicity index");
    got[static_cast<std::size_t>(idx - 1)] = true;
    r.multiplicities[static_cast<std::size_t>(idx - 1)] =
        long_from_string(str_field(e, "multiplicity"), "multiplicity");
  }
  if (j.contains("m0")) r.m0 = long_from_string(str_field(j, "m0"), "m0");
  const json& cert = field(j, "certified");
  if (!cert.is_boolean()) fail("'certified' must be a boolean");
  r.certified = cert.get<bool>();
  r.precision_bits = long_from_string(str_field(j, "precision_bits"), "precision_bits");
  if (j.contains("plan")) r.plan = j["plan"];
  if (j.contains("verification")) r.verification = j["verification"];
  return r;
}

}  // namespace rootmult::cli
