#pragma once

#include "merexp/magma_tree.hpp"
#include "merexp/numbers.hpp"
#include "merexp/tree_series.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace merexp {

/// One coefficient of exp(x) together with its normalized integer form.
struct ExpCoefficient
{
	MagmaTree tree;
	Rational a;
	Integer a_hat; // 2^(n-1) (n-1)!_M a = n! omega(n) a, n = degree(tree)
};

/// a(1) = a(x) = 1, a(t1*t2) = a(t1) a(t2) / (2^n - 2) with n = degree(t1*t2).
Rational a_coefficient(const MagmaTree &t);

/// sum of a(t) t over all trees of degree <= n, unit included.
TreeSeries exp_series(std::size_t n, std::uint64_t budget = kDefaultTreeBudget);

/// 2^(n-1) (n-1)!_M a(t). Throws InvariantViolation unless it is a positive integer.
Integer a_hat(const MagmaTree &t);

/// Product over inner nodes a of C(n(a) - 2, n_1(a) - 1)_M.
Integer a_hat_product(const MagmaTree &t);

/// a_hat(t) == C(n-2, n_1-1)_M a_hat(t1) a_hat(t2) for t = t1*t2.
bool a_hat_recursion_check(const MagmaTree &t);

/// exp * exp == exp(2x) at truncation n.
bool verify_functional_equation(std::size_t n, std::uint64_t budget = kDefaultTreeBudget);

/// d/dx exp_series(n+1), truncated to n, == exp_series(n).
bool verify_derivative(std::size_t n, std::uint64_t budget = kDefaultTreeBudget);

/// Over all trees of degree n: sum a(t) == 1/n! and sum a_hat(t) == omega(n).
bool verify_sums(std::size_t n, std::uint64_t budget = kDefaultTreeBudget);

/// Trees of degree n with a_hat(t) = 1, canonical order.
std::vector<MagmaTree> trees_with_a_hat_one(std::size_t n, std::uint64_t budget = kDefaultTreeBudget);

/// One row per tree of degree n, canonical order. Coefficients are memoized
/// on tree key across the levels built along the way.
std::vector<ExpCoefficient> coefficient_table(std::size_t n, std::uint64_t budget = kDefaultTreeBudget);

/// Header "tree_key\tdegree\ta_numerator\ta_denominator\ta_hat", then one row per entry.
void write_coefficients_tsv(std::ostream &out, const std::vector<ExpCoefficient> &rows);

/// One JSON object per line: {"tree":..,"degree":..,"a":"num/den","a_hat":".."}.
void write_coefficients_json(std::ostream &out, const std::vector<ExpCoefficient> &rows);

} // namespace merexp
