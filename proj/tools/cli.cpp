#include "cli.hpp"

#include "merexp/errors.hpp"
#include "merexp/exponential.hpp"
#include "merexp/mersenne_core.hpp"
#include "merexp/omega.hpp"
#include "merexp/prime_orders.hpp"
#include "merexp/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <ostream>

namespace merexp::cli {

namespace {

using nlohmann::ordered_json;

ordered_json factorization_json(const Factorization &f)
{
	ordered_json j = ordered_json::object();
	for (const auto &[p, e] : f.factors())
		j[p.get_str()] = e;
	return j;
}

std::string factorization_text(const Factorization &f)
{
	if (f.empty())
		return "1";
	std::string s;
	for (const auto &[p, e] : f.factors())
	{
		if (!s.empty())
			s += '*';
		s += p.get_str() + "^" + std::to_string(e);
	}
	return s;
}

std::uint64_t factor_bound_from_env()
{
	const char *value = std::getenv(kFactorBoundEnv);
	if (value == nullptr || *value == '\0')
		return kDefaultFactorBound;
	return parse_u64(value);
}

struct Options
{
	// omega
	std::uint64_t omega_max = 0;
	bool omega_factor = false;
	// shared
	std::string format = "json";
	// mersenne
	std::string argument;
	std::string convention = "example";
	// exp coeffs / verify
	std::size_t degree = 0;
};

void emit_omega(const Options &opt, std::uint64_t bound, std::ostream &out)
{
	if (opt.omega_max == 0)
		throw UsageError("--max must be >= 1");
	bool tsv = opt.format == "tsv";
	if (tsv)
		out << "n\tomega" << (opt.omega_factor ? "\tfactorization" : "") << '\n';
	for (std::uint64_t n = 1; n <= opt.omega_max; ++n)
	{
		Integer value;
		Factorization factors;
		if (opt.omega_factor)
		{
			OmegaValue rec = omega_record(n, bound); // throws unless both routes agree
			value = rec.value;
			factors = rec.factorization;
		}
		else
			value = omega(n);

		if (tsv)
		{
			out << n << '\t' << value.get_str();
			if (opt.omega_factor)
				out << '\t' << factorization_text(factors);
			out << '\n';
		}
		else
		{
			ordered_json j;
			j["n"] = n;
			j["omega"] = value.get_str();
			if (opt.omega_factor)
				j["factorization"] = factorization_json(factors);
			out << j.dump() << '\n';
		}
	}
}

void emit_mersenne(const std::string &what, const Options &opt, std::uint64_t bound, std::ostream &out)
{
	std::uint64_t arg = parse_u64(opt.argument);
	ordered_json j;
	if (what == "order")
	{
		j["p"] = opt.argument;
		j["order"] = std::to_string(mersenne_order(arg));
	}
	else if (what == "wieferich")
	{
		j["p"] = opt.argument;
		j["wieferich_exponent"] = std::to_string(wieferich_exponent(arg));
	}
	else if (what == "factor")
	{
		Factorization f = factor_mersenne(arg, bound);
		j["n"] = arg;
		j["mersenne"] = mersenne(arg).get_str();
		j["factorization"] = factorization_json(f);
	}
	else
	{
		PiConvention convention = opt.convention == "definition" ? PiConvention::definition : PiConvention::example;
		PiMResult r = pi_m(arg, convention, bound);
		j["x"] = arg;
		j["convention"] = opt.convention;
		j["count"] = r.count;
		ordered_json primes = ordered_json::array();
		for (const auto &p : r.primes)
			primes.push_back(p.get_str());
		j["primes"] = primes;
	}
	out << j.dump() << '\n';
}

int emit_verify(const Options &opt, std::uint64_t bound, std::ostream &out)
{
	auto results = run_verification({opt.degree, bound, kDefaultTreeBudget});
	const CheckResult *first_failure = nullptr;
	for (const auto &r : results)
	{
		out << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
		if (!r.passed && first_failure == nullptr)
			first_failure = &r;
	}
	if (first_failure != nullptr)
	{
		ordered_json j;
		j["check"] = first_failure->name;
		j["counterexample"] = first_failure->counterexample;
		out << j.dump() << '\n';
		return kFailure;
	}
	out << "all " << results.size() << " checks passed up to degree " << opt.degree << '\n';
	return kSuccess;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Mersenne binomials, factorial Mersenne quotients and the non-associative exponential"};
	app.require_subcommand(1);
	Options opt;

	auto *omega_cmd = app.add_subcommand("omega", "table of omega(n) = 2^(n-1) (n-1)!_M / n!");
	omega_cmd->add_option("--max", opt.omega_max, "largest n")->required();
	omega_cmd->add_flag("--factor", opt.omega_factor, "append the prime factorization (self-checked)");
	omega_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "tsv"}));

	auto *mersenne_cmd = app.add_subcommand("mersenne", "Mersenne orders, Wieferich exponents, factorizations");
	mersenne_cmd->require_subcommand(1);
	auto *order_cmd = mersenne_cmd->add_subcommand("order", "Mersenne order v(p) of an odd prime");
	auto *wieferich_cmd = mersenne_cmd->add_subcommand("wieferich", "Wieferich exponent eps(p) of an odd prime");
	auto *factor_cmd = mersenne_cmd->add_subcommand("factor", "prime factorization of M_n");
	auto *pim_cmd = mersenne_cmd->add_subcommand("pim", "pi_M(x) and the primes it counts");
	order_cmd->add_option("p", opt.argument)->required();
	wieferich_cmd->add_option("p", opt.argument)->required();
	factor_cmd->add_option("n", opt.argument)->required();
	pim_cmd->add_option("x", opt.argument)->required();
	pim_cmd
	    ->add_option("--convention", opt.convention,
	                 "example: v(p) <= x (primes dividing x!_M, the default); definition: v(p) <= x-1")
	    ->check(CLI::IsMember({"definition", "example"}));

	auto *exp_cmd = app.add_subcommand("exp", "coefficients of the non-associative exponential");
	exp_cmd->require_subcommand(1);
	auto *coeffs_cmd = exp_cmd->add_subcommand("coeffs", "a(t) and a_hat(t) for every tree of one degree");
	coeffs_cmd->add_option("--degree", opt.degree)->required();
	coeffs_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "tsv"}));

	auto *verify_cmd = app.add_subcommand("verify", "check every identity up to a degree");
	verify_cmd->add_option("--degree", opt.degree)->required();

	try
	{
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	}
	catch (const CLI::CallForHelp &)
	{
		out << app.help();
		return kSuccess;
	}
	catch (const CLI::ParseError &e)
	{
		err << "error: " << e.what() << '\n';
		return kUsage;
	}

	try
	{
		std::uint64_t bound = factor_bound_from_env();
		if (omega_cmd->parsed())
			emit_omega(opt, bound, out);
		else if (mersenne_cmd->parsed())
		{
			for (auto *cmd : {order_cmd, wieferich_cmd, factor_cmd, pim_cmd})
				if (cmd->parsed())
					emit_mersenne(cmd->get_name(), opt, bound, out);
		}
		else if (coeffs_cmd->parsed())
		{
			auto rows = coefficient_table(opt.degree);
			if (opt.format == "tsv")
				write_coefficients_tsv(out, rows);
			else
				write_coefficients_json(out, rows);
		}
		else if (verify_cmd->parsed())
			return emit_verify(opt, bound, out);
		return kSuccess;
	}
	catch (const UsageError &e)
	{
		err << "error: " << e.what() << '\n';
		return kUsage;
	}
	catch (const BoundExceeded &e)
	{
		err << "error: " << e.what() << '\n';
		return kBoundExceeded;
	}
	catch (const std::exception &e)
	{
		err << "internal error: " << e.what() << '\n';
		return kFailure;
	}
}

} // namespace merexp::cli
