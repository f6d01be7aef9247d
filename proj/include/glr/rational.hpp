#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "glr/error.hpp"

namespace glr {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "-p" and "p/q" with integer p, q (q != 0).
inline Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    fail(ErrorKind::InvalidInput, "'" + text + "' is not an exact rational");
  BigInt p(num[0] == '+' ? num.substr(1) : num), q(den[0] == '+' ? den.substr(1) : den);
  if (q == 0) fail(ErrorKind::InvalidInput, "'" + text + "' has zero denominator");
  return Rational(p, q);
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace glr
