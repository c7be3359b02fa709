#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "latq/errors.hpp"

namespace latq {

// Exact rational arithmetic with arbitrary-precision integer numerator
// and denominator. Values are always stored in lowest terms with a
// positive denominator, so equality and printing are canonical.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical text form: lowest terms, `p/q`, or plain `p` when q == 1.
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses `p` or `p/q` with optional leading sign on p. q must be positive.
inline Rat parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParamError("empty rational literal");
  const auto slash = s.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(s);
    } else {
      num = BigInt(s.substr(0, slash));
      den = BigInt(s.substr(slash + 1));
    }
  } catch (const std::runtime_error&) {
    throw ParamError("bad rational literal '" + s + "'");
  }
  if (den <= 0) throw ParamError("rational denominator must be positive: " + s);
  return Rat(num, den);
}

}  // namespace latq
