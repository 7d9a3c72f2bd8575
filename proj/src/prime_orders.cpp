#include "merexp/prime_orders.hpp"

#include "merexp/errors.hpp"
#include "merexp/mersenne_core.hpp"

#include <numeric>
#include <set>
#include <string>

namespace merexp {

namespace {

constexpr unsigned long kMersenneTrialLimit = 1ul << 16;

void require_odd_prime(std::uint64_t p)
{
	if (p == 2)
		throw UsageError("Mersenne order is defined for odd primes only");
	if (!is_prime(p))
		throw UsageError(std::to_string(p) + " is not prime");
}

std::uint64_t ord_p_u64(std::uint64_t n, std::uint64_t p)
{
	std::uint64_t r = 0;
	for (; n % p == 0; n /= p)
		++r;
	return r;
}

} // namespace

std::uint64_t mersenne_order(std::uint64_t p)
{
	require_odd_prime(p);
	std::uint64_t order = p - 1;
	for (std::uint64_t q : prime_divisors(p - 1))
	{
		while (order % q == 0 && pow_mod(2, order / q, p) == 1)
			order /= q;
	}
	return order;
}

std::uint64_t wieferich_exponent(std::uint64_t p)
{
	std::uint64_t order = mersenne_order(p);
	Integer prime = from_u64(p), modulus = prime, residue, exponent = from_u64(order);
	std::uint64_t e = 1;
	for (;;)
	{
		modulus *= prime;
		mpz_powm(residue.get_mpz_t(), Integer(2).get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
		if (residue != 1)
			return e;
		++e;
	}
}

OrderRecord order_record(std::uint64_t p)
{
	return OrderRecord{p, mersenne_order(p), wieferich_exponent(p)};
}

std::uint64_t ord_p_mersenne(std::uint64_t p, std::uint64_t n)
{
	if (n == 0)
		throw UsageError("Mersenne numbers are indexed from 1");
	if (p == 2)
		return 0;
	std::uint64_t order = mersenne_order(p);
	if (n % order != 0)
		return 0;
	return wieferich_exponent(p) + ord_p_u64(n, p);
}

Factorization factor_mersenne(std::uint64_t n, std::uint64_t bound)
{
	if (n == 0)
		throw UsageError("Mersenne numbers are indexed from 1");
	if (n > bound)
		throw BoundExceeded("factoring bound exceeded: n=" + std::to_string(n) + " > " + std::to_string(bound));

	const Integer target = mersenne(n);
	Integer rest = target;
	Factorization result;

	// Every prime q | M_n has v(q) | n and q = 1 mod lcm(2, v(q)).
	for (std::uint64_t d : divisors(n))
	{
		if (d == 1)
			continue;
		const unsigned long step = std::lcm<unsigned long>(2, d);
		for (unsigned long q = step + 1; q <= kMersenneTrialLimit; q += step)
		{
			if (!mpz_divisible_ui_p(rest.get_mpz_t(), q) || !is_prime(std::uint64_t{q}))
				continue;
			std::uint64_t e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Integer(q).get_mpz_t());
			result.multiply(Integer(q), e);
		}
	}
	if (rest != 1)
		for (const auto f = factor(rest); auto &[p, e] : f.factors())
			result.multiply(p, e);

	if (result.value() != target)
		throw InvariantViolation("factorization of M_" + std::to_string(n) + " does not reassemble");
	for (auto &[p, e] : result.factors())
	{
		std::uint64_t prime = to_u64(p);
		OrderRecord rec = order_record(prime);
		if (n % rec.order != 0 || e != rec.wieferich_exponent + ord_p_u64(n, prime))
			throw InvariantViolation("exponent of " + p.get_str() + " in M_" + std::to_string(n) +
			                         " disagrees with eps(p) + ord_p(n)");
	}
	return result;
}

PiMResult pi_m(std::uint64_t x, PiConvention convention, std::uint64_t bound)
{
	if (x < 2)
		throw UsageError("pi_M needs x >= 2");
	std::uint64_t max_order = convention == PiConvention::definition ? x - 1 : x;
	if (max_order > bound)
		throw BoundExceeded("factoring bound exceeded: pi_M needs M_1..M_" + std::to_string(max_order) +
		                    " but bound is " + std::to_string(bound));
	std::set<Integer> primes;
	for (std::uint64_t i = 1; i <= max_order; ++i)
		for (const auto f = factor_mersenne(i, bound); auto &[p, e] : f.factors())
			primes.insert(p);
	PiMResult out;
	out.primes.assign(primes.begin(), primes.end());
	out.count = out.primes.size();
	return out;
}

std::vector<std::uint64_t> wieferich_search(std::uint64_t limit, std::uint64_t cap)
{
	if (limit > cap)
		throw BoundExceeded("Wieferich search limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));
	std::vector<std::uint64_t> found;
	for (std::uint64_t p : primes_up_to(limit))
	{
		if (p == 2)
			continue;
		// eps(p) >= 2 iff 2^(p-1) = 1 mod p^2; confirm with the exact exponent.
		bool candidate = p >= (1ull << 32) || pow_mod(2, p - 1, p * p) == 1;
		if (!candidate)
			continue;
		if (wieferich_exponent(p) >= 2)
			found.push_back(p);
	}
	return found;
}

} // namespace merexp
