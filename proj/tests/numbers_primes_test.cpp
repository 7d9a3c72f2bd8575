#include "merexp/errors.hpp"
#include "merexp/numbers.hpp"
#include "merexp/primes.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace merexp;

TEST(Numbers, RationalTextIsAlwaysNumOverDen)
{
	EXPECT_EQ(to_string(Rational(3)), "3/1");
	Rational half(-2, 4);
	half.canonicalize();
	EXPECT_EQ(to_string(half), "-1/2");
	EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
	EXPECT_EQ(parse_rational("7"), Rational(7));
	EXPECT_THROW(parse_rational("1/0"), UsageError);
	EXPECT_THROW(parse_rational("a/2"), UsageError);
}

TEST(Numbers, ParseU64)
{
	EXPECT_EQ(parse_u64("18446744073709551615"), UINT64_MAX);
	EXPECT_THROW(parse_u64("18446744073709551616"), UsageError);
	EXPECT_THROW(parse_u64("-1"), UsageError);
	EXPECT_THROW(parse_u64("12x"), UsageError);
	EXPECT_THROW(parse_u64(""), UsageError);
}

TEST(Numbers, Valuation)
{
	EXPECT_EQ(valuation(Integer(2097151), Integer(7)), 2u); // M_21 = 7^2 * 127 * 337
	EXPECT_EQ(valuation(Integer(5), Integer(7)), 0u);
	EXPECT_THROW(valuation(Integer(0), Integer(7)), UsageError);
}

TEST(Primes, AgreesWithSieveBelow200000)
{
	auto primes = primes_up_to(200000);
	std::vector<bool> is_p(200001, false);
	for (auto p : primes)
		is_p[p] = true;
	for (std::uint64_t n = 0; n <= 200000; ++n)
		ASSERT_EQ(is_prime(n), is_p[n]) << n;
}

TEST(Primes, StrongPseudoprimesAndLargePrimes)
{
	// strong pseudoprimes to several small bases
	for (std::uint64_t n : {561ull, 3215031751ull, 2152302898747ull, 3474749660383ull, 341550071728321ull,
	                        3825123056546413051ull})
		EXPECT_FALSE(is_prime(n)) << n;
	EXPECT_TRUE(is_prime(std::uint64_t{2305843009213693951ull}));  // M_61
	EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ull})); // largest 64-bit prime
	EXPECT_FALSE(is_prime(std::uint64_t{18446744073709551615ull}));

	Integer m89 = pow2(89) - 1, m107 = pow2(107) - 1;
	EXPECT_TRUE(is_prime(m89));
	EXPECT_TRUE(is_prime(m107));
	EXPECT_FALSE(is_prime(Integer(m89 * m107)));
	EXPECT_FALSE(is_prime(Integer(0)));
	EXPECT_FALSE(is_prime(Integer(-7)));
}

TEST(Primes, FactorReassemblesRandomInputs)
{
	std::mt19937_64 rng(props::kPropertySeed);
	for (int i = 0; i < 300; ++i)
	{
		std::uint64_t n = rng() | 1;
		Factorization f = factor(n);
		ASSERT_EQ(f.value(), from_u64(n)) << n;
		for (auto &[p, e] : f.factors())
			ASSERT_TRUE(is_prime(p));
	}
}

TEST(Primes, FactorBigInteger)
{
	Integer m67 = pow2(67) - 1;
	Factorization f = factor(m67);
	ASSERT_EQ(f.size(), 2u);
	EXPECT_EQ(f.exponent_of(Integer(193707721)), 1u);
	EXPECT_EQ(f.exponent_of(Integer("761838257287")), 1u);
	Integer semi = (pow2(61) - 1) * (pow2(31) - 1) * 9;
	EXPECT_EQ(factor(semi).value(), semi);
	EXPECT_THROW(factor(Integer(0)), UsageError);
}

TEST(Primes, Divisors)
{
	EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
	EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
	EXPECT_EQ(prime_divisors(1092), (std::vector<std::uint64_t>{2, 3, 7, 13}));
}

TEST(Factorization, RejectsCompositeKeys)
{
	Factorization f;
	f.multiply(Integer(3), 2);
	f.multiply(Integer(5), 0);
	EXPECT_EQ(f.size(), 1u);
	EXPECT_EQ(f.value(), 9);
	EXPECT_THROW(f.multiply(Integer(9)), InvariantViolation);
	EXPECT_EQ(Factorization().value(), 1);
}
