#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ultra {

/// Exact rational number, always normalized (lowest terms, positive
/// denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Unbounded integer.
using BigInt = boost::multiprecision::cpp_int;

/// Parses an integer, a decimal literal ("0.25", "-3", "1.5e-2") or a
/// fraction "p/q". Decimal input is converted exactly. Throws SyntaxError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal approximation rounded half away from zero to `digits` places.
/// For display only.
std::string to_decimal(const Rational& value, int digits);

}  // namespace ultra
