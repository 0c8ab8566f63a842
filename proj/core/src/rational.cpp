// SPDX-License-Identifier: Apache-2.0
#include "rootmult/rational.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>

namespace rootmult {

namespace {

[[noreturn]] void bad(std::string_view s) {
  throw std::invalid_argument("not an exact rational: '" + std::string(s) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational rational_from_string(std::string_view input) {
  std::string_view s = input;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(input);

  // p/q form
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(input);
    // base must be explicit: mpz auto-detection would read leading zeros as octal
    BigRational q{BigInt(std::string(num), 10), BigInt(std::string(den), 10)};
    if (q.get_den() == 0) bad(input);
    q.canonicalize();
    return negative ? BigRational(-q) : q;
  }

  // [digits][.digits][e[+-]digits]
  std::string_view mantissa = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view es = s.substr(e + 1);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 9) bad(input);
    exp10 = std::stol(std::string(es));
    if (eneg) exp10 = -exp10;
  }

  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad(input);
    if (!ip.empty() && !all_digits(ip)) bad(input);
    if (!fp.empty() && !all_digits(fp)) bad(input);
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) bad(input);
    digits = std::string(mantissa);
  }
  if (digits.empty()) bad(input);

  BigInt n(digits, 10);
  BigRational q(n);
  if (exp10 > 0) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
    q *= BigRational(scale);
  } else if (exp10 < 0) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
    q /= BigRational(scale);
  }
  q.canonicalize();
  return negative ? BigRational(-q) : q;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace rootmult
