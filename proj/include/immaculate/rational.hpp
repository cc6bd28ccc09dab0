#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace immaculate {

// All coefficients in this project are exact rationals over arbitrary
// precision integers; no floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_to_string(const Rational& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace immaculate
