#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "sheffer/errors.hpp"

namespace sheffer {

// Exact scalar used everywhere. cpp_rational keeps values normalized
// (lowest terms, positive denominator), which is exactly the invariant
// the rest of the library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer factorial_int(int n);
Rational factorial(int n);

// C(top, k) for rational top: top (top-1) ... (top-k+1) / k!
Rational binomial(const Rational& top, int k);
Integer binomial_int(int n, int k);

// Parses "p", "-p", "p/q" (optional surrounding spaces). Throws DomainViolation
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// Decimal rendering with `digits` significant digits, round half to even.
// Used only by plot-data output; everything else stays exact.
std::string to_decimal_string(const Rational& q, int digits);

} // namespace sheffer
