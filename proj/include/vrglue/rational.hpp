#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace vrglue {

// All scale and distance arithmetic is exact. Decimal input tokens such as
// "0.6" are converted to the rational 3/5, never routed through a double.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "n", "n/d", and decimal notation ("-1.25", "6e-1").
Rational rational_from_string(std::string_view text);

// Canonical form: "n" for integers, "n/d" otherwise, d > 0.
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

inline const Rational& rational_zero() {
  static const Rational zero(0);
  return zero;
}

}  // namespace vrglue
