#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace operadkit {

// Exact rational scalar. Always stored reduced with positive denominator;
// arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "n" or "n/d" (d > 0 after normalization). Throws std::invalid_argument.
Rational rational_from_string(const std::string& text);

/// Renders as "n/d", denominator always present ("5" -> "5/1").
std::string rational_to_string(const Rational& q);

}  // namespace operadkit
