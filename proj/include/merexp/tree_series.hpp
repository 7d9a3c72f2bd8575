#pragma once

#include "merexp/magma_tree.hpp"
#include "merexp/numbers.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace merexp {

/**
 * Truncated tree power series sum c(t) t over monomials of degree <= truncation,
 * with exact rational coefficients.
 *
 * Storage is sparse and zero coefficients are never kept, so two series are
 * equal iff their term maps are equal. Binary operations require equal
 * truncations and throw UsageError otherwise.
 */
class TreeSeries
{
  public:
	using Terms = std::map<MagmaTree, Rational, CanonicalLess>;

	explicit TreeSeries(std::size_t truncation) : truncation_(truncation) {}

	static TreeSeries constant(const Rational &c, std::size_t truncation);
	static TreeSeries monomial(const MagmaTree &t, const Rational &c, std::size_t truncation);
	/// c * x
	static TreeSeries generator(std::size_t truncation, const Rational &c = 1);

	std::size_t truncation() const { return truncation_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Coefficient of t; zero when absent.
	Rational coefficient(const MagmaTree &t) const;

	/// Adds c to the coefficient of t. Terms above the truncation are dropped.
	TreeSeries &add_term(const MagmaTree &t, const Rational &c);

	TreeSeries &operator+=(const TreeSeries &other);
	TreeSeries &operator-=(const TreeSeries &other);

	friend bool operator==(const TreeSeries &a, const TreeSeries &b);

  private:
	std::size_t truncation_;
	Terms terms_;
};

TreeSeries operator+(TreeSeries a, const TreeSeries &b);
TreeSeries operator-(TreeSeries a, const TreeSeries &b);
TreeSeries operator-(const TreeSeries &a);

TreeSeries scale(const TreeSeries &f, const Rational &c);

/// Coefficient of t in f*g is the sum of f(t1) g(t2) over t = t1*t2, unit factors included.
/// Not associative.
TreeSeries multiply(const TreeSeries &f, const TreeSeries &g);
inline TreeSeries operator*(const TreeSeries &f, const TreeSeries &g) { return multiply(f, g); }

/// Leibniz derivation with d(1) = 0, d(x) = 1.
TreeSeries derivative(const TreeSeries &f);

/// eta_g(f): the algebra homomorphism x -> g applied to f. Requires ord(g) >= 1.
TreeSeries substitute(const TreeSeries &f, const TreeSeries &g);

/// substitute(f, c x); scales degree-n coefficients by c^n.
TreeSeries dilate(const TreeSeries &f, const Rational &c);

/// Drops every term of degree > truncation; truncation must not exceed f's.
TreeSeries truncate(const TreeSeries &f, std::size_t truncation);

/// Minimal degree of a nonzero term; std::nullopt stands for ord(0) = +infinity.
std::optional<std::size_t> ord(const TreeSeries &f);

/// Ordinary power series, coefficients[n] for x^n, n = 0..truncation.
struct ClassicalSeries
{
	std::size_t truncation = 0;
	std::vector<Rational> coefficients;

	friend bool operator==(const ClassicalSeries &, const ClassicalSeries &) = default;
};

/// [f]: every degree-n monomial maps to x^n.
ClassicalSeries classical_projection(const TreeSeries &f);

/// Line format:
///   truncation<TAB>N
///   tree_key<TAB>num/den      (one per term, degree then canonical order)
void write_series(std::ostream &out, const TreeSeries &f);
TreeSeries read_series(std::istream &in);

} // namespace merexp
