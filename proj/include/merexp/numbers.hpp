#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace merexp {

using Integer = mpz_class;
using Rational = mpq_class; // gmpxx keeps results canonical: gcd(num, den) = 1, den > 0

Integer pow2(std::uint64_t exponent);
Integer factorial(std::uint64_t n);

bool fits_u64(const Integer &value);
std::uint64_t to_u64(const Integer &value);
Integer from_u64(std::uint64_t value);

/// Largest e with p^e | value. value must be nonzero, p >= 2.
std::uint64_t valuation(Integer value, const Integer &p);

std::string to_string(const Integer &value);

/// Always "num/den", including den = 1.
std::string to_string(const Rational &value);

/// Accepts "num/den" or a bare integer; result is canonicalized.
Rational parse_rational(std::string_view text);

/// Parses a non-negative decimal integer that fits in 64 bits.
std::uint64_t parse_u64(std::string_view text);

} // namespace merexp
