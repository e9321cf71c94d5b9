#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tao {

/// Exact time value. All delays, clock values and timestamps use this type.
using Rational = boost::multiprecision::cpp_rational;

/// Parses `7`, `3/2` or `1.25` (optionally signed) into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Integer form when the denominator is 1, otherwise `p/q` in lowest terms.
std::string to_string(const Rational& value);

inline bool is_natural(const Rational& value)
{
  return value >= 0 && boost::multiprecision::denominator(value) == 1;
}

} // namespace tao
