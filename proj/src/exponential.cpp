#include "merexp/exponential.hpp"

#include "merexp/errors.hpp"
#include "merexp/mersenne_core.hpp"
#include "merexp/omega.hpp"

#include "json.hpp"

#include <ostream>
#include <string>
#include <unordered_map>

namespace merexp {

namespace {

Integer normalizer(std::size_t n) { return pow2(n - 1) * mersenne_factorial(n - 1); }

Integer normalized(const MagmaTree &t, const Rational &a)
{
	Rational scaled = a * Rational(normalizer(t.degree()));
	if (scaled.get_den() != 1 || scaled <= 0)
		throw InvariantViolation("a_hat(" + t.key() + ") = " + to_string(scaled) + " is not a positive integer");
	return scaled.get_num();
}

// a(t) for every tree of every level, keyed by tree key.
using CoefficientMemo = std::unordered_map<std::string, Rational>;

CoefficientMemo coefficients_by_level(const std::vector<std::vector<MagmaTree>> &levels)
{
	CoefficientMemo memo;
	memo.emplace(MagmaTree::unit().key(), 1);
	for (std::size_t d = 1; d < levels.size(); ++d)
	{
		const Rational denominator = d >= 2 ? Rational(pow2(d) - 2) : Rational(1);
		for (const auto &t : levels[d])
		{
			if (d == 1)
				memo.emplace(t.key(), 1);
			else
				memo.emplace(t.key(), memo.at(t.left().key()) * memo.at(t.right().key()) / denominator);
		}
	}
	return memo;
}

} // namespace

Rational a_coefficient(const MagmaTree &t)
{
	if (!t.is_product())
		return 1;
	return a_coefficient(t.left()) * a_coefficient(t.right()) / Rational(pow2(t.degree()) - 2);
}

TreeSeries exp_series(std::size_t n, std::uint64_t budget)
{
	auto levels = enumerate_trees_up_to(n, budget);
	CoefficientMemo memo = coefficients_by_level(levels);
	TreeSeries f(n);
	for (const auto &level : levels)
		for (const auto &t : level)
			f.add_term(t, memo.at(t.key()));
	return f;
}

Integer a_hat(const MagmaTree &t)
{
	if (t.is_unit())
		throw UsageError("a_hat needs degree >= 1");
	return normalized(t, a_coefficient(t));
}

Integer a_hat_product(const MagmaTree &t)
{
	if (t.is_unit())
		throw UsageError("a_hat needs degree >= 1");
	Integer product = 1;
	for (const auto &node : inner_nodes(t))
		product *= mersenne_binomial(node.subtree.degree() - 2, node.left_degree - 1);
	return product;
}

bool a_hat_recursion_check(const MagmaTree &t)
{
	auto [t1, t2] = decompose(t);
	return a_hat(t) == mersenne_binomial(t.degree() - 2, t1.degree() - 1) * a_hat(t1) * a_hat(t2);
}

bool verify_functional_equation(std::size_t n, std::uint64_t budget)
{
	TreeSeries f = exp_series(n, budget);
	return multiply(f, f) == dilate(f, 2);
}

bool verify_derivative(std::size_t n, std::uint64_t budget)
{
	return truncate(derivative(exp_series(n + 1, budget)), n) == exp_series(n, budget);
}

bool verify_sums(std::size_t n, std::uint64_t budget)
{
	Rational sum_a = 0;
	Integer sum_hat = 0;
	for (const auto &row : coefficient_table(n, budget))
	{
		sum_a += row.a;
		sum_hat += row.a_hat;
	}
	return sum_a == Rational(1, factorial(n)) && sum_hat == omega(n);
}

std::vector<MagmaTree> trees_with_a_hat_one(std::size_t n, std::uint64_t budget)
{
	std::vector<MagmaTree> out;
	for (const auto &row : coefficient_table(n, budget))
		if (row.a_hat == 1)
			out.push_back(row.tree);
	return out;
}

std::vector<ExpCoefficient> coefficient_table(std::size_t n, std::uint64_t budget)
{
	if (n == 0)
		throw UsageError("coefficient table needs degree >= 1");
	auto levels = enumerate_trees_up_to(n, budget);
	CoefficientMemo memo = coefficients_by_level(levels);
	std::vector<ExpCoefficient> rows;
	rows.reserve(levels[n].size());
	for (const auto &t : levels[n])
	{
		const Rational &a = memo.at(t.key());
		rows.push_back({t, a, normalized(t, a)});
	}
	return rows;
}

void write_coefficients_tsv(std::ostream &out, const std::vector<ExpCoefficient> &rows)
{
	out << "tree_key\tdegree\ta_numerator\ta_denominator\ta_hat\n";
	for (const auto &row : rows)
		out << row.tree.key() << '\t' << row.tree.degree() << '\t' << row.a.get_num().get_str() << '\t'
		    << row.a.get_den().get_str() << '\t' << row.a_hat.get_str() << '\n';
}

void write_coefficients_json(std::ostream &out, const std::vector<ExpCoefficient> &rows)
{
	for (const auto &row : rows)
	{
		nlohmann::ordered_json j;
		j["tree"] = row.tree.key();
		j["degree"] = row.tree.degree();
		j["a"] = to_string(row.a);
		j["a_hat"] = row.a_hat.get_str();
		out << j.dump() << '\n';
	}
}

} // namespace merexp
