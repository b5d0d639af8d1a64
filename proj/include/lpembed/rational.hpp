#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lpembed {

// Exact rational scalar used wherever distances and norms must be computed
// without rounding. Arbitrary precision, so denominators from deep dyadic
// subdivisions never overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// 2^-k as an exact rational, k >= 0.
inline Rational dyadic_unit(unsigned k) {
  return Rational(BigInt(1), BigInt(1) << k);
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Canonical "p/q" form; the denominator is always written so that parsers
// never have to guess.
inline std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

}  // namespace lpembed
