#pragma once

#include "merexp/numbers.hpp"
#include "merexp/prime_orders.hpp"
#include "merexp/primes.hpp"

#include <cstdint>

namespace merexp {

/// omega(n) together with its prime factorization; value == factorization.value().
struct OmegaValue
{
	std::uint64_t n = 0;
	Integer value;
	Factorization factorization;
};

/// omega(n) = 2^(n-1) (n-1)!_M / n!, n >= 1, as an exact quotient.
/// Throws InvariantViolation if n! does not divide the numerator.
Integer omega(std::uint64_t n);

/// ord_p(omega(n)) from the closed form:
///   p = 2:   d_2(n) - 1
///   p odd:   eps(p) m - ((n - d_p(n)) - (m - d_p(m))) / (p - 1),  m = floor((n-1) / v(p))
/// Signed so that a negative value (which would refute integrality) is representable.
std::int64_t ord_p_omega(std::uint64_t n, std::uint64_t p);

/// Factorization of omega(n) assembled prime-by-prime from ord_p_omega over the
/// support {2} and the odd primes with v(p) <= n - 1. Does not consult omega(n).
Factorization omega_factorization(std::uint64_t n, std::uint64_t bound = kDefaultFactorBound);

/// Both routes at once; throws InvariantViolation if they disagree.
OmegaValue omega_record(std::uint64_t n, std::uint64_t bound = kDefaultFactorBound);

/// S_k(n) = C(n-2, k-1)_M omega(k) omega(n-k), 1 <= k <= n-1.
Integer s_k(std::uint64_t n, std::uint64_t k);

/// sum_{k=1}^{n-1} S_k(n) == omega(n), n >= 2.
bool verify_omega_recursion(std::uint64_t n);

} // namespace merexp
