#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tmne {

using Integer = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive
// denominator as long as every value is canonicalized on construction,
// which parse_rational and the arithmetic operators guarantee.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with decimal digits only. Throws
// std::invalid_argument("invalid rational: ...") otherwise, including q = 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Rational make_rational(long num, long den = 1);

// Decimal rendering, truncated toward zero, for display only.
std::string to_decimal(const Rational& q, int digits);

}  // namespace tmne
