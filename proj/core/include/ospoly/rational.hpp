#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ospoly {

using BigInt = boost::multiprecision::cpp_int;

// Exact rationals, always in lowest terms with positive denominator.
// No floating point appears anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;

// "p" for integers, "p/q" otherwise; the sign sits on the numerator.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q"; anything else throws ParseError.
Rational rational_from_string(const std::string& s);

// base^exp with negative exponents allowed for nonzero base.
Rational rational_pow(const Rational& base, int exp);

BigInt factorial(unsigned n);

inline Rational half() { return Rational(1, 2); }

} // namespace ospoly
