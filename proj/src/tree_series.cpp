#include "merexp/tree_series.hpp"

#include "merexp/errors.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

namespace merexp {

namespace {

void require_same_truncation(const TreeSeries &a, const TreeSeries &b)
{
	if (a.truncation() != b.truncation())
		throw UsageError("truncation mismatch: " + std::to_string(a.truncation()) + " vs " +
		                 std::to_string(b.truncation()));
}

// Linear combination of monomials with integer multiplicities, used for d(t).
using MonomialSum = std::vector<std::pair<MagmaTree, Integer>>;

class DerivativeCache
{
  public:
	const MonomialSum &of(const MagmaTree &t)
	{
		if (auto it = cache_.find(t.key()); it != cache_.end())
			return it->second;
		MonomialSum out;
		if (t.is_leaf())
			out.emplace_back(MagmaTree::unit(), 1);
		else if (t.is_product())
		{
			// d(l*r) = d(l)*r + l*d(r); fold duplicates (e.g. d(x*x) = 2x)
			std::map<MagmaTree, Integer, CanonicalLess> acc;
			for (const auto &[s, c] : of(t.left()))
				acc[graft(s, t.right())] += c;
			for (const auto &[s, c] : of(t.right()))
				acc[graft(t.left(), s)] += c;
			out.assign(acc.begin(), acc.end());
		}
		return cache_.emplace(t.key(), std::move(out)).first->second;
	}

  private:
	std::unordered_map<std::string, MonomialSum> cache_;
};

class SubstitutionCache
{
  public:
	explicit SubstitutionCache(const TreeSeries &g) : g_(g) {}

	const TreeSeries &image(const MagmaTree &t)
	{
		if (auto it = cache_.find(t.key()); it != cache_.end())
			return it->second;
		TreeSeries out(g_.truncation());
		if (t.is_unit())
			out = TreeSeries::constant(1, g_.truncation());
		else if (t.is_leaf())
			out = g_;
		else if (t.degree() <= g_.truncation())
			out = multiply(image(t.left()), image(t.right()));
		return cache_.emplace(t.key(), std::move(out)).first->second;
	}

  private:
	const TreeSeries &g_;
	std::unordered_map<std::string, TreeSeries> cache_;
};

} // namespace

TreeSeries TreeSeries::constant(const Rational &c, std::size_t truncation)
{
	return monomial(MagmaTree::unit(), c, truncation);
}

TreeSeries TreeSeries::monomial(const MagmaTree &t, const Rational &c, std::size_t truncation)
{
	TreeSeries f(truncation);
	f.add_term(t, c);
	return f;
}

TreeSeries TreeSeries::generator(std::size_t truncation, const Rational &c)
{
	return monomial(MagmaTree::x(), c, truncation);
}

Rational TreeSeries::coefficient(const MagmaTree &t) const
{
	auto it = terms_.find(t);
	return it == terms_.end() ? Rational(0) : it->second;
}

TreeSeries &TreeSeries::add_term(const MagmaTree &t, const Rational &c)
{
	if (t.degree() > truncation_ || c == 0)
		return *this;
	auto [it, inserted] = terms_.try_emplace(t, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
	return *this;
}

TreeSeries &TreeSeries::operator+=(const TreeSeries &other)
{
	require_same_truncation(*this, other);
	for (const auto &[t, c] : other.terms_)
		add_term(t, c);
	return *this;
}

TreeSeries &TreeSeries::operator-=(const TreeSeries &other)
{
	require_same_truncation(*this, other);
	for (const auto &[t, c] : other.terms_)
		add_term(t, -c);
	return *this;
}

bool operator==(const TreeSeries &a, const TreeSeries &b)
{
	require_same_truncation(a, b);
	return a.terms_ == b.terms_;
}

TreeSeries operator+(TreeSeries a, const TreeSeries &b) { return a += b; }
TreeSeries operator-(TreeSeries a, const TreeSeries &b) { return a -= b; }
TreeSeries operator-(const TreeSeries &a) { return scale(a, -1); }

TreeSeries scale(const TreeSeries &f, const Rational &c)
{
	TreeSeries out(f.truncation());
	for (const auto &[t, coeff] : f.terms())
		out.add_term(t, coeff * c);
	return out;
}

TreeSeries multiply(const TreeSeries &f, const TreeSeries &g)
{
	require_same_truncation(f, g);
	const std::size_t n = f.truncation();
	std::vector<std::vector<const TreeSeries::Terms::value_type *>> g_by_degree(n + 1);
	for (const auto &term : g.terms())
		g_by_degree[term.first.degree()].push_back(&term);

	TreeSeries out(n);
	Rational product;
	for (const auto &[t1, c1] : f.terms())
		for (std::size_t d2 = 0; d2 + t1.degree() <= n; ++d2)
			for (const auto *term : g_by_degree[d2])
			{
				product = c1 * term->second;
				out.add_term(graft(t1, term->first), product);
			}
	return out;
}

TreeSeries derivative(const TreeSeries &f)
{
	DerivativeCache cache;
	TreeSeries out(f.truncation());
	for (const auto &[t, c] : f.terms())
		for (const auto &[s, mult] : cache.of(t))
			out.add_term(s, c * Rational(mult));
	return out;
}

TreeSeries substitute(const TreeSeries &f, const TreeSeries &g)
{
	require_same_truncation(f, g);
	if (auto o = ord(g); o && *o == 0)
		throw UsageError("substitution needs ord(g) >= 1");
	SubstitutionCache cache(g);
	TreeSeries out(f.truncation());
	for (const auto &[t, c] : f.terms())
		out += scale(cache.image(t), c);
	return out;
}

TreeSeries dilate(const TreeSeries &f, const Rational &c)
{
	TreeSeries out(f.truncation());
	for (const auto &[t, coeff] : f.terms())
	{
		Rational power;
		mpz_pow_ui(power.get_num_mpz_t(), c.get_num_mpz_t(), t.degree());
		mpz_pow_ui(power.get_den_mpz_t(), c.get_den_mpz_t(), t.degree());
		power.canonicalize();
		out.add_term(t, coeff * power);
	}
	return out;
}

TreeSeries truncate(const TreeSeries &f, std::size_t truncation)
{
	if (truncation > f.truncation())
		throw UsageError("cannot raise truncation from " + std::to_string(f.truncation()) + " to " +
		                 std::to_string(truncation));
	TreeSeries out(truncation);
	for (const auto &[t, c] : f.terms())
		out.add_term(t, c);
	return out;
}

std::optional<std::size_t> ord(const TreeSeries &f)
{
	if (f.is_zero())
		return std::nullopt;
	return f.terms().begin()->first.degree(); // canonical order is degree-major
}

ClassicalSeries classical_projection(const TreeSeries &f)
{
	ClassicalSeries out{f.truncation(), std::vector<Rational>(f.truncation() + 1, Rational(0))};
	for (const auto &[t, c] : f.terms())
		out.coefficients[t.degree()] += c;
	return out;
}

void write_series(std::ostream &out, const TreeSeries &f)
{
	out << "truncation\t" << f.truncation() << '\n';
	for (const auto &[t, c] : f.terms())
		out << t.key() << '\t' << to_string(c) << '\n';
}

TreeSeries read_series(std::istream &in)
{
	std::string line;
	if (!std::getline(in, line) || line.rfind("truncation\t", 0) != 0)
		throw UsageError("series stream must start with 'truncation<TAB>N'");
	TreeSeries f(parse_u64(std::string_view(line).substr(11)));
	while (std::getline(in, line))
	{
		if (line.empty())
			continue;
		auto tab = line.find('\t');
		if (tab == std::string::npos)
			throw UsageError("series line without tab: " + line);
		MagmaTree t = parse_tree(std::string_view(line).substr(0, tab));
		if (t.degree() > f.truncation())
			throw UsageError("term above truncation: " + line);
		f.add_term(t, parse_rational(std::string_view(line).substr(tab + 1)));
	}
	return f;
}

} // namespace merexp
