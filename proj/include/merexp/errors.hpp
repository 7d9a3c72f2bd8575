#pragma once

#include <stdexcept>
#include <string>

namespace merexp {

/// Caller passed an argument outside an operation's domain (composite p, r > n, ...).
class UsageError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

/// A configured resource bound (factoring bound, tree budget, search cap) would be exceeded.
class BoundExceeded : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// An internal exactness or consistency check failed. Always a bug, never user error.
class InvariantViolation : public std::logic_error
{
  public:
	using std::logic_error::logic_error;
};

} // namespace merexp
