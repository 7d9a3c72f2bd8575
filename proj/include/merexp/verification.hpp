#pragma once

#include "merexp/magma_tree.hpp"
#include "merexp/prime_orders.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace merexp {

struct CheckResult
{
	std::string name;
	bool passed = true;
	std::string counterexample; // first failure, empty when passed
};

struct VerificationOptions
{
	std::size_t degree = 0;
	std::uint64_t factor_bound = kDefaultFactorBound;
	std::uint64_t tree_budget = kDefaultTreeBudget;
};

/// Runs every identity check up to the given degree, in a fixed order:
/// functional_equation, derivative, sums, product_formula, recursion,
/// omega_recursion, factorization. Degree 0 passes vacuously.
std::vector<CheckResult> run_verification(const VerificationOptions &options);

} // namespace merexp
