#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace countfn {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Lowest terms, sign on the numerator: "3", "-1/2".
inline std::string to_string(const Rational& q) {
  const Integer& num = boost::multiprecision::numerator(q);
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace countfn
