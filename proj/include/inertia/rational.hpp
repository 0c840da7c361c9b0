#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "inertia/error.hpp"

namespace inertia {

// Exact arithmetic everywhere; no floating point is stored or compared.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p" or "p/q" with integer p, positive integer q. Anything else is a
// SchemaError. The result is canonical (lowest terms, positive denominator).
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&](const char* why) -> Rational {
    fail(errc::schema_error, "invalid rational \"" + text + "\" (" + why + ")");
  };
  const auto digits = [](const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  if (num.empty()) return bad("empty numerator");
  if (!digits(num, num[0] == '-' ? 1 : 0)) return bad("numerator is not an integer");
  if (slash == std::string::npos) return Rational(BigInt(num));
  const std::string den = text.substr(slash + 1);
  if (!digits(den, 0)) return bad("denominator is not a positive integer");
  BigInt d(den);
  if (d == 0) return bad("zero denominator");
  return Rational(BigInt(num), d);
}

// Lowest terms; the denominator is omitted when it is 1.
inline std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

inline std::string format_vector(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + ")";
}

}  // namespace inertia
