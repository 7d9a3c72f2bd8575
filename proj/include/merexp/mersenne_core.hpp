#pragma once

#include "merexp/numbers.hpp"

#include <cstdint>

namespace merexp {

/// M_n = 2^n - 1, n >= 1.
Integer mersenne(std::uint64_t n);

/// n!_M = M_1 * ... * M_n; 0!_M = 1.
Integer mersenne_factorial(std::uint64_t n);

/// n!_M / (r!_M (n-r)!_M). Throws InvariantViolation if the division is not exact.
Integer mersenne_binomial(std::uint64_t n, std::uint64_t r);

/// Gaussian binomial [n r]_q at q = 2 from the q-Pascal rule
/// [n r] = [n-1 r-1] + q^r [n-1 r]. Shares no code with mersenne_binomial.
Integer gaussian_binomial_at_2(std::uint64_t n, std::uint64_t r);

/// Sum of the base-p digits of m.
std::uint64_t digit_sum(std::uint64_t m, std::uint64_t p);

/// ord_p(n!) via (n - d_p(n)) / (p - 1).
std::uint64_t ord_factorial_digit_form(std::uint64_t n, std::uint64_t p);

/// ord_p(n!) via sum_i floor(n / p^i).
std::uint64_t ord_factorial_floor_sum(std::uint64_t n, std::uint64_t p);

/// ord_p(n!); computes both forms and throws InvariantViolation if they differ.
std::uint64_t ord_factorial(std::uint64_t n, std::uint64_t p);

} // namespace merexp
