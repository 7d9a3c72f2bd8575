#include "merexp/magma_tree.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>

namespace merexp {

namespace {

const std::string kUnitKey = "1";

class TreeParser
{
  public:
	explicit TreeParser(std::string_view text) : text_(text) {}

	MagmaTree parse()
	{
		MagmaTree t = term();
		skip_ws();
		if (pos_ != text_.size())
			fail("unexpected trailing input");
		return t;
	}

  private:
	MagmaTree term()
	{
		skip_ws();
		if (pos_ >= text_.size())
			fail("expected '1', 'x' or '('");
		char c = text_[pos_];
		if (c == '1')
		{
			++pos_;
			return MagmaTree::unit();
		}
		if (c == 'x')
		{
			++pos_;
			return MagmaTree::x();
		}
		if (c != '(')
			fail("expected '1', 'x' or '('");
		++pos_;
		MagmaTree l = term();
		expect('*');
		MagmaTree r = term();
		expect(')');
		return graft(l, r);
	}

	void expect(char c)
	{
		skip_ws();
		if (pos_ >= text_.size() || text_[pos_] != c)
			fail(std::string("expected '") + c + "'");
		++pos_;
	}

	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	[[noreturn]] void fail(const std::string &what) { throw ParseError(pos_, what); }

	std::string_view text_;
	std::size_t pos_ = 0;
};

void collect_inner(const MagmaTree &t, std::vector<InnerNode> &out)
{
	if (!t.is_product())
		return;
	out.push_back({t, t.left().degree()});
	collect_inner(t.left(), out);
	collect_inner(t.right(), out);
}

} // namespace

MagmaTree MagmaTree::x()
{
	static const auto leaf = std::make_shared<const Node>(Node{{}, {}, 1, "x"});
	return MagmaTree(leaf);
}

bool MagmaTree::is_leaf() const { return node_ && node_->degree == 1; }

std::size_t MagmaTree::degree() const { return node_ ? node_->degree : 0; }

const MagmaTree &MagmaTree::left() const
{
	if (!is_product())
		throw UsageError("only product trees have factors");
	return node_->left;
}

const MagmaTree &MagmaTree::right() const
{
	if (!is_product())
		throw UsageError("only product trees have factors");
	return node_->right;
}

const std::string &MagmaTree::key() const { return node_ ? node_->key : kUnitKey; }

MagmaTree graft(const MagmaTree &t1, const MagmaTree &t2)
{
	if (t2.is_unit())
		return t1;
	if (t1.is_unit())
		return t2;
	std::string key;
	key.reserve(t1.key().size() + t2.key().size() + 3);
	key += '(';
	key += t1.key();
	key += '*';
	key += t2.key();
	key += ')';
	return MagmaTree(std::make_shared<const MagmaTree::Node>(
	    MagmaTree::Node{t1, t2, t1.degree() + t2.degree(), std::move(key)}));
}

std::pair<MagmaTree, MagmaTree> decompose(const MagmaTree &t)
{
	if (!t.is_product())
		throw UsageError("decompose needs a tree of degree >= 2, got " + t.key());
	return {t.left(), t.right()};
}

std::strong_ordering canonical_compare(const MagmaTree &a, const MagmaTree &b)
{
	if (auto c = a.degree() <=> b.degree(); c != 0)
		return c;
	if (a.degree() < 2 || a == b)
		return std::strong_ordering::equal;
	if (auto c = a.left().degree() <=> b.left().degree(); c != 0)
		return c;
	if (auto c = canonical_compare(a.left(), b.left()); c != 0)
		return c;
	return canonical_compare(a.right(), b.right());
}

std::uint64_t catalan_saturating(std::uint64_t n)
{
	constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
	// C(k+1) = C(k) * 2(2k+1) / (k+2)
	unsigned __int128 c = 1;
	for (std::uint64_t k = 0; k < n; ++k)
	{
		c = c * (2 * (2 * k + 1)) / (k + 2);
		if (c > kMax)
			return kMax;
	}
	return static_cast<std::uint64_t>(c);
}

std::vector<std::vector<MagmaTree>> enumerate_trees_up_to(std::size_t max_degree, std::uint64_t budget)
{
	std::uint64_t total = 0;
	for (std::size_t d = 1; d <= max_degree; ++d)
	{
		std::uint64_t count = catalan_saturating(d - 1);
		if (count > budget || total > budget - count)
			throw BoundExceeded("tree budget exceeded: degree " + std::to_string(d) + " needs " +
			                    std::to_string(count) + " trees, budget " + std::to_string(budget));
		total += count;
	}

	std::vector<std::vector<MagmaTree>> levels(max_degree + 1);
	levels[0] = {MagmaTree::unit()};
	if (max_degree >= 1)
		levels[1] = {MagmaTree::x()};
	for (std::size_t d = 2; d <= max_degree; ++d)
	{
		auto &level = levels[d];
		level.reserve(catalan_saturating(d - 1));
		for (std::size_t k = 1; k < d; ++k)
			for (const auto &l : levels[k])
				for (const auto &r : levels[d - k])
					level.push_back(graft(l, r));
	}
	return levels;
}

std::vector<MagmaTree> enumerate_trees(std::size_t n, std::uint64_t budget)
{
	if (n == 0)
		throw UsageError("enumerate_trees needs degree >= 1");
	if (catalan_saturating(n - 1) > budget)
		throw BoundExceeded("tree budget exceeded: degree " + std::to_string(n) + " needs " +
		                    std::to_string(catalan_saturating(n - 1)) + " trees, budget " + std::to_string(budget));
	return std::move(enumerate_trees_up_to(n, std::numeric_limits<std::uint64_t>::max())[n]);
}

std::vector<MagmaTree> comb_trees(std::size_t n)
{
	if (n == 0)
		throw UsageError("comb_trees needs n >= 1");
	std::vector<MagmaTree> current = {MagmaTree::x()};
	for (std::size_t d = 2; d <= n; ++d)
	{
		std::vector<MagmaTree> next;
		std::unordered_set<std::string> seen;
		for (const auto &t : current)
			for (auto candidate : {graft(MagmaTree::x(), t), graft(t, MagmaTree::x())})
				if (seen.insert(candidate.key()).second)
					next.push_back(std::move(candidate));
		current = std::move(next);
	}
	std::sort(current.begin(), current.end(), CanonicalLess{});
	return current;
}

std::vector<InnerNode> inner_nodes(const MagmaTree &t)
{
	std::vector<InnerNode> out;
	collect_inner(t, out);
	return out;
}

ParseError::ParseError(std::size_t offset, const std::string &what)
    : UsageError("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset)
{
}

MagmaTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

} // namespace merexp
