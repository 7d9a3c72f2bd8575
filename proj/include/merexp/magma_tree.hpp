#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "merexp/errors.hpp"

namespace merexp {

inline constexpr std::uint64_t kDefaultTreeBudget = 2'000'000;

/**
 * Element of the free unital magma on one generator x, i.e. a planar binary
 * rooted tree (or the empty tree 1).
 *
 * Immutable value with shared structure. A product node never stores the unit
 * as a child: grafting with 1 returns the other factor. Each node caches its
 * degree (leaf count) and its canonical text key, so equality and hashing are
 * string operations.
 */
class MagmaTree
{
  public:
	/// The unit 1.
	MagmaTree() = default;

	static MagmaTree unit() { return {}; }
	static MagmaTree x();

	bool is_unit() const { return node_ == nullptr; }
	bool is_leaf() const;
	bool is_product() const { return degree() >= 2; }

	std::size_t degree() const;

	/// Factors of a product node; throws UsageError on 1 or x.
	const MagmaTree &left() const;
	const MagmaTree &right() const;

	/// Canonical fully parenthesized text: "1", "x" or "(l*r)".
	const std::string &key() const;

	friend MagmaTree graft(const MagmaTree &t1, const MagmaTree &t2);

	friend bool operator==(const MagmaTree &a, const MagmaTree &b)
	{
		return a.node_ == b.node_ || a.key() == b.key();
	}

  private:
	struct Node;
	explicit MagmaTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

	std::shared_ptr<const Node> node_;
};

struct MagmaTree::Node
{
	MagmaTree left, right; // both unit for the leaf x
	std::size_t degree = 0;
	std::string key;
};

/// Magma product: t1 if t2 = 1, t2 if t1 = 1, otherwise the tree with root children (t1, t2).
MagmaTree graft(const MagmaTree &t1, const MagmaTree &t2);

/// The unique (t1, t2), both != 1, with t = t1 * t2. Requires degree(t) >= 2.
std::pair<MagmaTree, MagmaTree> decompose(const MagmaTree &t);

/// Canonical order: by degree, then left-factor degree, then left factor, then right factor.
std::strong_ordering canonical_compare(const MagmaTree &a, const MagmaTree &b);

struct CanonicalLess
{
	bool operator()(const MagmaTree &a, const MagmaTree &b) const { return canonical_compare(a, b) < 0; }
};

struct MagmaTreeHash
{
	std::size_t operator()(const MagmaTree &t) const { return std::hash<std::string>{}(t.key()); }
};

/// Catalan(n) saturated at UINT64_MAX.
std::uint64_t catalan_saturating(std::uint64_t n);

/// All Catalan(n-1) trees of degree n >= 1 in canonical order.
/// Throws BoundExceeded when Catalan(n-1) > budget.
std::vector<MagmaTree> enumerate_trees(std::size_t n, std::uint64_t budget = kDefaultTreeBudget);

/// levels[d] = enumerate_trees(d) for 1 <= d <= max_degree; levels[0] = {1}.
std::vector<std::vector<MagmaTree>> enumerate_trees_up_to(std::size_t max_degree,
                                                          std::uint64_t budget = kDefaultTreeBudget);

/// T_1 = {x}, T_n = x*T_{n-1} u T_{n-1}*x, deduplicated, canonical order.
std::vector<MagmaTree> comb_trees(std::size_t n);

struct InnerNode
{
	MagmaTree subtree;       // the full subtree rooted at this node
	std::size_t left_degree; // degree of its left factor
};

/// Inner nodes in preorder (root first, then left subtree, then right subtree).
/// A degree-n tree has n - 1 of them.
std::vector<InnerNode> inner_nodes(const MagmaTree &t);

/// Thrown by parse_tree; offset is the 0-based byte position of the problem.
class ParseError : public UsageError
{
  public:
	ParseError(std::size_t offset, const std::string &what);
	std::size_t offset() const { return offset_; }

  private:
	std::size_t offset_;
};

/// Grammar: t ::= "1" | "x" | "(" t "*" t ")", whitespace ignored.
/// A "1" inside a product is absorbed by the unit law.
MagmaTree parse_tree(std::string_view text);

inline const std::string &render(const MagmaTree &t) { return t.key(); }

} // namespace merexp
