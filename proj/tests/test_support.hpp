#pragma once

#include "merexp/magma_tree.hpp"
#include "merexp/tree_series.hpp"

#include <cstdint>
#include <ostream>
#include <random>

namespace merexp::props {

// Every randomized property test draws from this seed.
inline constexpr std::uint64_t kPropertySeed = 20261016;

inline MagmaTree random_tree(std::mt19937_64 &rng, std::size_t degree)
{
	if (degree == 0)
		return MagmaTree::unit();
	if (degree == 1)
		return MagmaTree::x();
	std::uniform_int_distribution<std::size_t> split(1, degree - 1);
	std::size_t k = split(rng);
	return graft(random_tree(rng, k), random_tree(rng, degree - k));
}

inline Rational random_rational(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<long> num(-6, 6);
	std::uniform_int_distribution<long> den(1, 5);
	Rational r(num(rng), den(rng));
	r.canonicalize();
	return r;
}

/// Sparse series with up to max_terms terms of degree in [min_degree, truncation].
inline TreeSeries random_series(std::mt19937_64 &rng, std::size_t truncation, std::size_t max_terms,
                                std::size_t min_degree = 0)
{
	std::uniform_int_distribution<std::size_t> degree(min_degree, truncation);
	std::uniform_int_distribution<std::size_t> count(0, max_terms);
	TreeSeries f(truncation);
	for (std::size_t i = count(rng); i > 0; --i)
		f.add_term(random_tree(rng, degree(rng)), random_rational(rng));
	return f;
}

} // namespace merexp::props

namespace merexp {

// Readable gtest failure output.
inline void PrintTo(const TreeSeries &f, std::ostream *os) { write_series(*os, f); }
inline void PrintTo(const MagmaTree &t, std::ostream *os) { *os << t.key(); }

} // namespace merexp
