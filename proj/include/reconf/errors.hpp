#pragma once

#include <stdexcept>
#include <string>

namespace reconf {

/// Malformed or out-of-range input (bad vertex ids, self-loops, non-tree, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multiset operands whose cardinalities are required to agree do not.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A token was removed from a vertex that holds none.
class TokenError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A query that has no answer for the given arguments (e.g. unreachable target).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A start or target configuration is not feasible (not dominating / not hitting).
class FeasibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition on a matching or move was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive routines refuse inputs beyond their enumeration budget.
class OracleScaleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when a step that is guaranteed to succeed does not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace reconf
