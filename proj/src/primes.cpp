#include "merexp/primes.hpp"

#include "merexp/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace merexp {

namespace {

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::uint64_t kSmallTrialLimit = 1000;
constexpr int kBigPrimeReps = 30;

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s)
{
	std::uint64_t x = pow_mod(a % n, d, n);
	if (x == 1 || x == n - 1)
		return true;
	for (int i = 1; i < s; ++i)
	{
		x = mul_mod(x, x, n);
		if (x == n - 1)
			return true;
	}
	return false;
}

// Brent's cycle variant of Pollard rho with f(y) = y^2 + c.
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c)
{
	const std::uint64_t batch = 128;
	std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
	auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
	for (std::uint64_t r = 1; g == 1; r <<= 1)
	{
		x = y;
		for (std::uint64_t i = 0; i < r; ++i)
			y = f(y);
		for (std::uint64_t k = 0; k < r && g == 1; k += batch)
		{
			ys = y;
			for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i)
			{
				y = f(y);
				q = mul_mod(q, x > y ? x - y : y - x, n);
			}
			g = std::gcd(q, n);
		}
	}
	if (g == n)
	{
		do
		{
			ys = f(ys);
			g = std::gcd(x > ys ? x - ys : ys - x, n);
		} while (g == 1);
	}
	return g;
}

void factor_u64_into(std::uint64_t n, std::map<std::uint64_t, std::uint64_t> &out)
{
	if (n == 1)
		return;
	if (is_prime(n))
	{
		++out[n];
		return;
	}
	for (std::uint64_t c = 1;; ++c)
	{
		std::uint64_t d = rho_u64(n, c);
		if (d != n && d != 1)
		{
			factor_u64_into(d, out);
			factor_u64_into(n / d, out);
			return;
		}
	}
}

Integer rho_big(const Integer &n, unsigned long c)
{
	Integer y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
	const unsigned long batch = 128;
	auto f = [&](Integer &v) {
		v = v * v + c;
		mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
	};
	for (unsigned long r = 1; g == 1; r <<= 1)
	{
		x = y;
		for (unsigned long i = 0; i < r; ++i)
			f(y);
		for (unsigned long k = 0; k < r && g == 1; k += batch)
		{
			ys = y;
			for (unsigned long i = 0; i < std::min(batch, r - k); ++i)
			{
				f(y);
				diff = abs(x - y);
				q = (q * diff) % n;
			}
			g = gcd(q, n);
		}
	}
	if (g == n)
	{
		do
		{
			f(ys);
			g = gcd(abs(x - ys), n);
		} while (g == 1);
	}
	return g;
}

void factor_big_into(const Integer &n, Factorization &out)
{
	if (n == 1)
		return;
	if (fits_u64(n))
	{
		for (const auto f = factor(to_u64(n)); auto &[p, e] : f.factors())
			out.multiply(p, e);
		return;
	}
	if (is_prime(n))
	{
		out.multiply(n, 1);
		return;
	}
	for (unsigned long c = 1;; ++c)
	{
		Integer d = rho_big(n, c);
		if (d != n && d != 1)
		{
			factor_big_into(d, out);
			factor_big_into(n / d, out);
			return;
		}
	}
}

} // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
	return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m)
{
	if (m == 1)
		return 0;
	std::uint64_t result = 1;
	base %= m;
	while (exponent > 0)
	{
		if (exponent & 1)
			result = mul_mod(result, base, m);
		base = mul_mod(base, base, m);
		exponent >>= 1;
	}
	return result;
}

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t p : kWitnesses)
	{
		if (n == p)
			return true;
		if (n % p == 0)
			return false;
	}
	std::uint64_t d = n - 1;
	int s = 0;
	while ((d & 1) == 0)
	{
		d >>= 1;
		++s;
	}
	return std::all_of(kWitnesses.begin(), kWitnesses.end(),
	                   [&](std::uint64_t a) { return miller_rabin_round(n, a, d, s); });
}

bool is_prime(const Integer &n)
{
	if (sgn(n) <= 0)
		return false;
	if (fits_u64(n))
		return is_prime(to_u64(n));
	return mpz_probab_prime_p(n.get_mpz_t(), kBigPrimeReps) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
	std::vector<std::uint64_t> primes;
	if (limit < 2)
		return primes;
	std::vector<bool> composite(limit + 1, false);
	for (std::uint64_t i = 2; i <= limit; ++i)
	{
		if (composite[i])
			continue;
		primes.push_back(i);
		for (std::uint64_t j = i * i; j <= limit; j += i)
			composite[j] = true;
	}
	return primes;
}

void Factorization::multiply(const Integer &prime, std::uint64_t exponent)
{
	if (exponent == 0)
		return;
	if (!is_prime(prime))
		throw InvariantViolation("factorization key is not prime: " + prime.get_str());
	factors_[prime] += exponent;
}

std::uint64_t Factorization::exponent_of(const Integer &prime) const
{
	auto it = factors_.find(prime);
	return it == factors_.end() ? 0 : it->second;
}

Integer Factorization::value() const
{
	Integer r = 1, pe;
	for (auto &[p, e] : factors_)
	{
		mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
		r *= pe;
	}
	return r;
}

Factorization factor(std::uint64_t n)
{
	if (n == 0)
		throw UsageError("cannot factor zero");
	std::map<std::uint64_t, std::uint64_t> raw;
	for (std::uint64_t p = 2; p <= kSmallTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2))
	{
		while (n % p == 0)
		{
			++raw[p];
			n /= p;
		}
	}
	factor_u64_into(n, raw);
	Factorization out;
	for (auto [p, e] : raw)
		out.multiply(from_u64(p), e);
	return out;
}

Factorization factor(const Integer &n)
{
	if (sgn(n) <= 0)
		throw UsageError("can only factor positive integers");
	if (fits_u64(n))
		return factor(to_u64(n));
	Integer rest = n;
	Factorization out;
	for (unsigned long p = 2; p <= kSmallTrialLimit; p += (p == 2 ? 1 : 2))
	{
		if (!mpz_divisible_ui_p(rest.get_mpz_t(), p))
			continue;
		std::uint64_t e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Integer(p).get_mpz_t());
		out.multiply(Integer(p), e);
	}
	factor_big_into(rest, out);
	return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
	std::vector<std::uint64_t> out;
	for (const auto f = factor(n); auto &[p, e] : f.factors())
		out.push_back(to_u64(p));
	return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
	std::vector<std::uint64_t> out = {1};
	for (const auto f = factor(n); auto &[p, e] : f.factors())
	{
		std::uint64_t prime = to_u64(p);
		std::size_t count = out.size();
		std::uint64_t pk = 1;
		for (std::uint64_t k = 1; k <= e; ++k)
		{
			pk *= prime;
			for (std::size_t i = 0; i < count; ++i)
				out.push_back(out[i] * pk);
		}
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace merexp
