// Exact scalar domains: arbitrary-precision rationals (GMP-backed).
#pragma once

#include <gmpxx.h>

#include <string>

namespace fanocert {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalized fraction; mpq_class(a, b) alone does not reduce.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "3/5", "-1/8", "4".  Inverse of parse_fraction.
std::string to_fraction_string(const Rational& q);

// Accepts "a/b" or "a" with optional sign; throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_fraction(const std::string& s);

inline bool is_zero_coeff(const Rational& q) { return sgn(q) == 0; }

inline Rational scale_coeff(const Rational& c, const Rational& q) { return c * q; }

std::string coeff_to_string(const Rational& c);
Rational coeff_from_string_rational(const std::string& s);

}  // namespace fanocert
