#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lzroot {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q", or a decimal literal such as "-4.285" (converted exactly).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

Rational abs_value(const Rational& x);

/// Number of bits in |x|; 0 for x = 0.
long bit_length(const Integer& x);

/// Decimal digits of max(|numerator|, denominator).
int decimal_size(const Rational& x);

/// log10|x| to double accuracy, valid far outside the double exponent range.
double log10_abs(const Rational& x);

/// Decimal expansion of x truncated toward zero after `fraction_digits` places.
std::string truncated_decimal(const Rational& x, int fraction_digits);

/// Longest decimal prefix shared by the expansions of lo and hi. For lo == hi
/// the expansion is cut after `point_digits` significant digits.
std::string shared_decimal_prefix(const Rational& lo, const Rational& hi,
                                  int point_digits = 40);

/// Significant digits in a decimal prefix (leading zeros, sign and point skipped).
int significant_digits(std::string_view decimal);

/// Shared significant decimal digits of lo and hi.
int shared_digits(const Rational& lo, const Rational& hi);

}  // namespace lzroot
