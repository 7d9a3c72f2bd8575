#pragma once

#include "merexp/numbers.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace merexp {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Deterministic for every 64-bit input (Miller-Rabin, bases 2..37).
bool is_prime(std::uint64_t n);

/// Deterministic below 2^64. Above, BPSW plus extra Miller-Rabin rounds
/// (mpz_probab_prime_p, reps = 30); GMP seeds those rounds deterministically.
bool is_prime(const Integer &n);

/// Sieve of Eratosthenes, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Prime -> exponent, keys ascending. Every key is checked prime on insertion.
class Factorization
{
  public:
	using Map = std::map<Integer, std::uint64_t>;

	Factorization() = default;

	/// Multiplies in prime^exponent. Zero exponents are ignored.
	void multiply(const Integer &prime, std::uint64_t exponent = 1);

	const Map &factors() const { return factors_; }
	bool empty() const { return factors_.empty(); }
	std::size_t size() const { return factors_.size(); }
	std::uint64_t exponent_of(const Integer &prime) const;

	/// Product of p^e over all entries; 1 when empty.
	Integer value() const;

	friend bool operator==(const Factorization &, const Factorization &) = default;

  private:
	Map factors_;
};

/// Complete factorization (trial division, then Pollard-Brent rho). n >= 1.
Factorization factor(const Integer &n);
Factorization factor(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

} // namespace merexp
