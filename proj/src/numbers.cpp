#include "merexp/numbers.hpp"

#include "merexp/errors.hpp"

#include <charconv>
#include <limits>

namespace merexp {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP ui functions must take 64-bit words");

Integer pow2(std::uint64_t exponent)
{
	Integer r;
	mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
	return r;
}

Integer factorial(std::uint64_t n)
{
	Integer r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return r;
}

bool fits_u64(const Integer &value) { return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Integer &value)
{
	if (!fits_u64(value))
		throw UsageError("value does not fit in 64 bits: " + value.get_str());
	return mpz_get_ui(value.get_mpz_t());
}

Integer from_u64(std::uint64_t value) { return Integer(static_cast<unsigned long>(value)); }

std::uint64_t valuation(Integer value, const Integer &p)
{
	if (value == 0)
		throw UsageError("valuation of zero is infinite");
	if (p < 2)
		throw UsageError("valuation base must be >= 2");
	return mpz_remove(value.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
}

std::string to_string(const Integer &value) { return value.get_str(); }

std::string to_string(const Rational &value)
{
	return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
	auto slash = text.find('/');
	auto parse_int = [](std::string_view s) {
		Integer r;
		if (s.empty() || r.set_str(std::string(s), 10) != 0)
			throw UsageError("malformed integer '" + std::string(s) + "'");
		return r;
	};
	if (slash == std::string_view::npos)
		return Rational(parse_int(text));
	Integer num = parse_int(text.substr(0, slash));
	Integer den = parse_int(text.substr(slash + 1));
	if (den == 0)
		throw UsageError("zero denominator in '" + std::string(text) + "'");
	Rational r(num, den);
	r.canonicalize();
	return r;
}

std::uint64_t parse_u64(std::string_view text)
{
	std::uint64_t value = 0;
	auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
	if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
		throw UsageError("expected a non-negative integer below 2^64, got '" + std::string(text) + "'");
	return value;
}

} // namespace merexp
