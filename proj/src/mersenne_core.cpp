#include "merexp/mersenne_core.hpp"

#include "merexp/errors.hpp"
#include "merexp/primes.hpp"

#include <string>
#include <vector>

namespace merexp {

namespace {

void require_prime(std::uint64_t p)
{
	if (p < 2)
		throw UsageError("digit base must be >= 2, got " + std::to_string(p));
	if (!is_prime(p))
		throw UsageError(std::to_string(p) + " is not prime");
}

void require_binomial_range(std::uint64_t n, std::uint64_t r)
{
	if (r > n)
		throw UsageError("binomial needs r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
}

} // namespace

Integer mersenne(std::uint64_t n)
{
	if (n == 0)
		throw UsageError("Mersenne numbers are indexed from 1");
	return pow2(n) - 1;
}

Integer mersenne_factorial(std::uint64_t n)
{
	Integer r = 1;
	for (std::uint64_t i = 1; i <= n; ++i)
		r *= mersenne(i);
	return r;
}

Integer mersenne_binomial(std::uint64_t n, std::uint64_t r)
{
	require_binomial_range(n, r);
	Integer num = mersenne_factorial(n);
	Integer den = mersenne_factorial(r) * mersenne_factorial(n - r);
	if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
		throw InvariantViolation("Mersenne binomial (" + std::to_string(n) + " " + std::to_string(r) +
		                         ") is not an integer");
	Integer q;
	mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
	return q;
}

Integer gaussian_binomial_at_2(std::uint64_t n, std::uint64_t r)
{
	require_binomial_range(n, r);
	// row[j] holds [i j] at q = 2 for the current i
	std::vector<Integer> row(r + 1, Integer(0));
	row[0] = 1;
	for (std::uint64_t i = 1; i <= n; ++i)
	{
		for (std::uint64_t j = std::min(i, r); j >= 1; --j)
			row[j] = row[j - 1] + pow2(j) * row[j];
	}
	return row[r];
}

std::uint64_t digit_sum(std::uint64_t m, std::uint64_t p)
{
	require_prime(p);
	std::uint64_t s = 0;
	for (; m > 0; m /= p)
		s += m % p;
	return s;
}

std::uint64_t ord_factorial_digit_form(std::uint64_t n, std::uint64_t p)
{
	std::uint64_t d = digit_sum(n, p);
	if ((n - d) % (p - 1) != 0)
		throw InvariantViolation("n - d_p(n) not divisible by p - 1");
	return (n - d) / (p - 1);
}

std::uint64_t ord_factorial_floor_sum(std::uint64_t n, std::uint64_t p)
{
	require_prime(p);
	std::uint64_t total = 0;
	for (std::uint64_t q = n / p; q > 0; q /= p)
		total += q;
	return total;
}

std::uint64_t ord_factorial(std::uint64_t n, std::uint64_t p)
{
	std::uint64_t closed = ord_factorial_digit_form(n, p);
	if (closed != ord_factorial_floor_sum(n, p))
		throw InvariantViolation("Legendre forms disagree for n=" + std::to_string(n) + " p=" + std::to_string(p));
	return closed;
}

} // namespace merexp
