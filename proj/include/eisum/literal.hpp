#pragma once

// Exact parsing of numeric literals from flags and config files. Values never
// pass through binary floating point.

#include "eisum/numeric.hpp"

#include <string>
#include <string_view>

namespace eisum {

/// "3", "-1/10", "0.25", "1e-3", "+2.5E2".
Rational parse_rational(std::string_view s);

/// Real and/or imaginary parts with an i suffix: "5+i", "-1-1.5i", "2i",
/// "-i", "1/2-3/4i", "7".
GaussianRational parse_gaussian(std::string_view s);

/// A rational, optionally times pi: "0.1", "pi", "-pi/2", "3pi/4", "0.5pi".
/// Evaluated at the working precision.
Real parse_angle(std::string_view s);

int parse_int(std::string_view s);

/// Exact text for q: a terminating decimal when the denominator allows it
/// ("-1.5", "0.1"), otherwise "n/d".
std::string format_rational(const Rational& q);

}  // namespace eisum
