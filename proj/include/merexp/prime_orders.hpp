#pragma once

#include "merexp/numbers.hpp"
#include "merexp/primes.hpp"

#include <cstdint>
#include <vector>

namespace merexp {

inline constexpr std::uint64_t kDefaultFactorBound = 64;
inline constexpr std::uint64_t kDefaultWieferichCap = 10'000'000;

/// Mersenne order and Wieferich exponent of an odd prime.
struct OrderRecord
{
	std::uint64_t p = 0;
	std::uint64_t order = 0;              // least r >= 1 with p | M_r
	std::uint64_t wieferich_exponent = 0; // ord_p(M_order), always >= 1

	friend bool operator==(const OrderRecord &, const OrderRecord &) = default;
};

/// Multiplicative order of 2 mod p, found by stripping prime factors of p - 1.
/// Rejects p = 2 and composite p.
std::uint64_t mersenne_order(std::uint64_t p);

/// Largest e with p^e | 2^v(p) - 1, evaluated as 2^v(p) mod p^e for e = 2, 3, ...
std::uint64_t wieferich_exponent(std::uint64_t p);

OrderRecord order_record(std::uint64_t p);

/// ord_p(M_n): 0 unless v(p) | n, otherwise eps(p) + ord_p(n).
/// p = 2 returns 0 by convention since every M_n is odd.
std::uint64_t ord_p_mersenne(std::uint64_t p, std::uint64_t n);

/// Complete factorization of M_n for 1 <= n <= bound. Every exponent is
/// cross-checked against ord_p_mersenne and v(p) | n; a mismatch throws
/// InvariantViolation. n > bound throws BoundExceeded.
Factorization factor_mersenne(std::uint64_t n, std::uint64_t bound = kDefaultFactorBound);

/// definition: odd primes with v(p) <= x - 1 (primes dividing (x-1)!_M).
/// example:    odd primes with v(p) <= x, the reading used when pi_M(16) = 15
///             is listed as the primes dividing 16!_M.
enum class PiConvention
{
	definition,
	example,
};

struct PiMResult
{
	std::uint64_t count = 0;
	std::vector<Integer> primes; // ascending
};

/// x >= 2.
PiMResult pi_m(std::uint64_t x, PiConvention convention = PiConvention::definition,
               std::uint64_t bound = kDefaultFactorBound);

/// Odd primes p <= limit with eps(p) >= 2, ascending.
std::vector<std::uint64_t> wieferich_search(std::uint64_t limit, std::uint64_t cap = kDefaultWieferichCap);

} // namespace merexp
