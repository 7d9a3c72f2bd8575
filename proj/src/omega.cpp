#include "merexp/omega.hpp"

#include "merexp/errors.hpp"
#include "merexp/mersenne_core.hpp"

#include <bit>
#include <set>
#include <string>

namespace merexp {

Integer omega(std::uint64_t n)
{
	if (n == 0)
		throw UsageError("omega is defined for n >= 1");
	Integer num = pow2(n - 1) * mersenne_factorial(n - 1);
	Integer den = factorial(n);
	if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
		throw InvariantViolation("omega(" + std::to_string(n) + ") is not an integer");
	Integer q;
	mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
	return q;
}

std::int64_t ord_p_omega(std::uint64_t n, std::uint64_t p)
{
	if (n == 0)
		throw UsageError("omega is defined for n >= 1");
	if (!is_prime(p))
		throw UsageError(std::to_string(p) + " is not prime");
	if (p == 2)
		return static_cast<std::int64_t>(std::popcount(n)) - 1;

	OrderRecord rec = order_record(p);
	std::uint64_t m = (n - 1) / rec.order;
	std::uint64_t legendre_n = n - digit_sum(n, p);
	std::uint64_t legendre_m = m - digit_sum(m, p);
	std::uint64_t diff = legendre_n - legendre_m;
	if (legendre_n < legendre_m || diff % (p - 1) != 0)
		throw InvariantViolation("Legendre difference not divisible by p - 1 at n=" + std::to_string(n) +
		                         " p=" + std::to_string(p));
	return static_cast<std::int64_t>(rec.wieferich_exponent * m) - static_cast<std::int64_t>(diff / (p - 1));
}

Factorization omega_factorization(std::uint64_t n, std::uint64_t bound)
{
	if (n == 0)
		throw UsageError("omega is defined for n >= 1");
	if (n - 1 > bound)
		throw BoundExceeded("factoring bound exceeded: omega(" + std::to_string(n) + ") needs M_1..M_" +
		                    std::to_string(n - 1));

	std::set<std::uint64_t> support = {2};
	for (std::uint64_t i = 1; i < n; ++i)
		for (const auto f = factor_mersenne(i, bound); auto &[p, e] : f.factors())
			support.insert(to_u64(p));

	Factorization out;
	for (std::uint64_t p : support)
	{
		std::int64_t e = ord_p_omega(n, p);
		if (e < 0)
			throw InvariantViolation("negative valuation of omega(" + std::to_string(n) + ") at " + std::to_string(p));
		out.multiply(from_u64(p), static_cast<std::uint64_t>(e));
	}
	return out;
}

OmegaValue omega_record(std::uint64_t n, std::uint64_t bound)
{
	OmegaValue rec{n, omega(n), omega_factorization(n, bound)};
	if (rec.factorization.value() != rec.value)
		throw InvariantViolation("prime-by-prime omega(" + std::to_string(n) + ") disagrees with the quotient");
	return rec;
}

Integer s_k(std::uint64_t n, std::uint64_t k)
{
	if (n < 2 || k < 1 || k > n - 1)
		throw UsageError("S_k(n) needs 1 <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
	return mersenne_binomial(n - 2, k - 1) * omega(k) * omega(n - k);
}

bool verify_omega_recursion(std::uint64_t n)
{
	if (n < 2)
		throw UsageError("omega recursion needs n >= 2");
	Integer sum = 0;
	for (std::uint64_t k = 1; k < n; ++k)
		sum += s_k(n, k);
	return sum == omega(n);
}

} // namespace merexp
