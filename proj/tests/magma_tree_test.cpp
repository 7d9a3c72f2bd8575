#include "merexp/magma_tree.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace merexp;

namespace {

const MagmaTree X = MagmaTree::x();
const MagmaTree XX = graft(X, X);

// Catalan numbers from C(0) = 1, C(n+1) = sum C(i) C(n-i).
std::vector<std::uint64_t> catalan_by_recurrence(std::size_t n)
{
	std::vector<std::uint64_t> c(n + 1, 0);
	c[0] = 1;
	for (std::size_t m = 1; m <= n; ++m)
		for (std::size_t i = 0; i < m; ++i)
			c[m] += c[i] * c[m - 1 - i];
	return c;
}

} // namespace

TEST(Graft, UnitLawAndDegree)
{
	EXPECT_EQ(XX.degree(), 2u);
	EXPECT_EQ(XX.key(), "(x*x)");
	EXPECT_EQ(graft(MagmaTree::unit(), XX), XX);
	EXPECT_EQ(graft(XX, MagmaTree::unit()), XX);
	EXPECT_EQ(graft(MagmaTree::unit(), MagmaTree::unit()), MagmaTree::unit());

	MagmaTree left_comb = graft(XX, X);
	MagmaTree right_comb = graft(X, XX);
	EXPECT_EQ(left_comb.degree(), 3u);
	EXPECT_NE(left_comb, right_comb);
	EXPECT_EQ(MagmaTree::unit().degree(), 0u);
}

TEST(Decompose, Values)
{
	EXPECT_EQ(decompose(XX), std::make_pair(X, X));
	EXPECT_EQ(decompose(graft(XX, X)), std::make_pair(XX, X));
	EXPECT_EQ(decompose(graft(X, XX)), std::make_pair(X, XX));
	EXPECT_THROW(decompose(X), UsageError);
	EXPECT_THROW(decompose(MagmaTree::unit()), UsageError);
}

TEST(Enumerate, SmallDegrees)
{
	EXPECT_EQ(enumerate_trees(1), std::vector<MagmaTree>{X});
	EXPECT_EQ(enumerate_trees(3), (std::vector<MagmaTree>{graft(X, XX), graft(XX, X)}));
	EXPECT_EQ(enumerate_trees(5).size(), 14u);
	EXPECT_THROW(enumerate_trees(0), UsageError);
	EXPECT_THROW(enumerate_trees(10, 100), BoundExceeded);
	EXPECT_THROW(enumerate_trees(40), BoundExceeded);
}

TEST(Enumerate, CatalanCountsUpTo14)
{
	auto catalan = catalan_by_recurrence(13);
	for (std::size_t n = 1; n <= 14; ++n)
	{
		auto trees = enumerate_trees(n);
		ASSERT_EQ(trees.size(), catalan[n - 1]) << n;
		ASSERT_EQ(catalan_saturating(n - 1), catalan[n - 1]);
	}
}

TEST(Enumerate, CanonicalStrictlyIncreasingAndDistinct)
{
	for (std::size_t n = 1; n <= 9; ++n)
	{
		auto trees = enumerate_trees(n);
		for (std::size_t i = 1; i < trees.size(); ++i)
			ASSERT_TRUE(canonical_compare(trees[i - 1], trees[i]) < 0) << trees[i - 1].key() << " " << trees[i].key();
		std::set<std::string> keys;
		for (const auto &t : trees)
			keys.insert(t.key());
		ASSERT_EQ(keys.size(), trees.size());
	}
}

TEST(Enumerate, DecomposeGraftInverse)
{
	auto levels = enumerate_trees_up_to(10);
	for (std::size_t d = 2; d <= 10; ++d)
		for (const auto &t : levels[d])
		{
			auto [l, r] = decompose(t);
			ASSERT_EQ(graft(l, r), t);
			ASSERT_EQ(l.degree() + r.degree(), d);
		}
}

TEST(Parse, Values)
{
	MagmaTree right_comb = parse_tree("(x*(x*x))");
	EXPECT_EQ(right_comb, graft(X, XX));
	EXPECT_EQ(parse_tree("((x*x)*(x*x))"), graft(XX, XX));
	EXPECT_EQ(parse_tree(" ( x * 1 ) "), X);
	EXPECT_EQ(parse_tree("((1*x)*(x*1))"), XX);
	EXPECT_EQ(parse_tree("1"), MagmaTree::unit());
}

TEST(Parse, ErrorsCarryOffsets)
{
	auto offset_of = [](std::string_view text) -> std::size_t {
		try
		{
			parse_tree(text);
		}
		catch (const ParseError &e)
		{
			return e.offset();
		}
		ADD_FAILURE() << "no error for " << text;
		return 0;
	};
	EXPECT_EQ(offset_of("(x*"), 3u);
	EXPECT_EQ(offset_of(""), 0u);
	EXPECT_EQ(offset_of("(x x)"), 3u);
	EXPECT_EQ(offset_of("x)"), 1u);
	EXPECT_EQ(offset_of("(y*x)"), 1u);
	EXPECT_EQ(offset_of("(x*x"), 4u);
}

TEST(Parse, RoundTripsEveryTreeUpToDegree10)
{
	auto levels = enumerate_trees_up_to(10);
	for (const auto &level : levels)
		for (const auto &t : level)
			ASSERT_EQ(parse_tree(render(t)), t);
}

TEST(Parse, RenderOfParseIsNormalForm)
{
	std::mt19937_64 rng(props::kPropertySeed);
	for (int i = 0; i < 200; ++i)
	{
		MagmaTree t = props::random_tree(rng, 1 + rng() % 9);
		// decorate with whitespace and unit factors
		std::string noisy;
		for (char c : t.key())
		{
			if (c == 'x' && rng() % 3 == 0)
				noisy += rng() % 2 ? "( 1 * x )" : "(x*1)";
			else
				noisy += c;
			if (rng() % 4 == 0)
				noisy += ' ';
		}
		ASSERT_EQ(render(parse_tree(noisy)), t.key()) << noisy;
	}
}

TEST(CombTrees, Values)
{
	EXPECT_EQ(comb_trees(1), std::vector<MagmaTree>{X});
	EXPECT_EQ(comb_trees(2), std::vector<MagmaTree>{XX});
	EXPECT_EQ(comb_trees(4).size(), 4u);
	EXPECT_THROW(comb_trees(0), UsageError);
}

TEST(CombTrees, SubsetOfEnumerationWithPowerOfTwoCount)
{
	for (std::size_t n = 2; n <= 12; ++n)
	{
		auto combs = comb_trees(n);
		ASSERT_EQ(combs.size(), std::size_t{1} << (n - 2)) << n;
		auto all = enumerate_trees(n);
		for (const auto &t : combs)
			ASSERT_TRUE(std::binary_search(all.begin(), all.end(), t, CanonicalLess{})) << t.key();
	}
}

TEST(InnerNodes, Values)
{
	EXPECT_TRUE(inner_nodes(X).empty());
	auto single = inner_nodes(XX);
	ASSERT_EQ(single.size(), 1u);
	EXPECT_EQ(single[0].subtree, XX);
	EXPECT_EQ(single[0].left_degree, 1u);

	MagmaTree balanced = graft(XX, XX);
	auto nodes = inner_nodes(balanced);
	ASSERT_EQ(nodes.size(), 3u);
	EXPECT_EQ(nodes[0].subtree, balanced);
	EXPECT_EQ(nodes[0].left_degree, 2u);
	EXPECT_EQ(nodes[1].subtree, XX);
	EXPECT_EQ(nodes[1].left_degree, 1u);
	EXPECT_EQ(nodes[2].subtree, XX);
	EXPECT_EQ(nodes[2].left_degree, 1u);
}

TEST(InnerNodes, CountIsDegreeMinusOne)
{
	auto levels = enumerate_trees_up_to(9);
	for (std::size_t d = 1; d <= 9; ++d)
		for (const auto &t : levels[d])
			ASSERT_EQ(inner_nodes(t).size(), d - 1);
}
