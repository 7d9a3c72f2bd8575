#include "merexp/verification.hpp"

#include "merexp/errors.hpp"
#include "merexp/exponential.hpp"
#include "merexp/mersenne_core.hpp"
#include "merexp/omega.hpp"

#include <algorithm>
#include <functional>

namespace merexp {

namespace {

CheckResult run_check(std::string name, const std::function<std::string()> &body)
{
	CheckResult result{std::move(name), true, {}};
	try
	{
		result.counterexample = body();
	}
	catch (const InvariantViolation &e)
	{
		result.counterexample = std::string("invariant violation: ") + e.what();
	}
	result.passed = result.counterexample.empty();
	return result;
}

} // namespace

std::vector<CheckResult> run_verification(const VerificationOptions &options)
{
	const std::size_t degree = options.degree;
	const std::uint64_t budget = options.tree_budget;
	std::vector<CheckResult> results;

	results.push_back(run_check("functional_equation", [&]() -> std::string {
		return verify_functional_equation(degree, budget) ? "" : "exp*exp != exp(2x) at N=" + std::to_string(degree);
	}));

	results.push_back(run_check("derivative", [&]() -> std::string {
		return verify_derivative(degree, budget) ? "" : "exp' != exp at N=" + std::to_string(degree);
	}));

	results.push_back(run_check("sums", [&]() -> std::string {
		for (std::size_t n = 1; n <= degree; ++n)
			if (!verify_sums(n, budget))
				return "sum identities fail at degree " + std::to_string(n);
		return "";
	}));

	std::vector<std::vector<MagmaTree>> levels;
	if (degree >= 1)
		levels = enumerate_trees_up_to(degree, budget);

	results.push_back(run_check("product_formula", [&]() -> std::string {
		for (std::size_t d = 1; d < levels.size(); ++d)
			for (const auto &t : levels[d])
				if (a_hat(t) != a_hat_product(t))
					return "a_hat != inner-node product at " + t.key();
		return "";
	}));

	results.push_back(run_check("recursion", [&]() -> std::string {
		for (std::size_t d = 2; d < levels.size(); ++d)
			for (const auto &t : levels[d])
				if (!a_hat_recursion_check(t))
					return "binomial recursion fails at " + t.key();
		return "";
	}));

	results.push_back(run_check("omega_recursion", [&]() -> std::string {
		for (std::uint64_t n = 2; n <= degree; ++n)
			if (!verify_omega_recursion(n))
				return "sum_k S_k(n) != omega(n) at n=" + std::to_string(n);
		return "";
	}));

	results.push_back(run_check("factorization", [&]() -> std::string {
		// factor_mersenne and omega_record throw on any mismatch
		std::uint64_t top = std::min<std::uint64_t>(degree, options.factor_bound);
		for (std::uint64_t n = 1; n <= top; ++n)
		{
			if (factor_mersenne(n, options.factor_bound).value() != mersenne(n))
				return "M_" + std::to_string(n) + " does not reassemble";
			omega_record(n, options.factor_bound);
		}
		return "";
	}));

	return results;
}

} // namespace merexp
