#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cheeger_lab {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Parses "3/7", "-2", "0.25" (exact decimal fraction) or "1.5e-2".
Rat parse_rational(const std::string& text);

// "p/q" for non-integers, plain integer otherwise.
std::string to_fraction_string(const Rat& r);

// Decimal rendering with the given number of significant digits (>= 12 for
// report output); the result is approximate unless the rational is a
// terminating decimal.
std::string to_decimal_string(const Rat& r, int significant_digits = 15);

double to_double(const Rat& r);

}  // namespace cheeger_lab
