#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace entro {

// Exact rational arithmetic for every symbolic coefficient in the library.
// cpp_rational keeps values in lowest terms with a positive denominator, so
// operator== is canonical equality and there is no floating point anywhere
// in the symbolic core.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Parse "p", "-p" or "p/q" (q > 0 after sign normalization).
// Throws ParseError on anything else, including q = 0.
Rat parse_rat(const std::string& text);

// Render as "p" or "p/q" with q > 1; inverse of parse_rat.
std::string rat_str(const Rat& value);

// -1, 0 or +1.
int rat_sign(const Rat& value);

// Exact value as double (for the numeric oracle only).
double rat_double(const Rat& value);

}  // namespace entro
