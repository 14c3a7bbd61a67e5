#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace scrollink {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// "p" when integral, "p/q" otherwise (reduced, q > 0).
inline std::string fraction_string(const Rational& q) {
  std::string num = boost::multiprecision::numerator(q).str();
  if (is_integer(q)) return num;
  return num + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace scrollink
