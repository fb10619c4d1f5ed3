#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace partq {

// All probability-level arithmetic is exact; floating point only enters at
// the amplitude level (see density_matrix.hpp).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "num", "-num" and "num/den" with a positive denominator.
Rational parse_rational(const std::string& text);

// Canonical rendering: reduced "num/den", or just "num" when den == 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

double to_double(const Rational& r);

}  // namespace partq
