#ifndef STALLINGS_ERRORS_HPP
#define STALLINGS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stallings {

/// Bad word syntax or a generator index outside 1..k.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated domain.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A containment-requiring operation was given subgroups with no morphism.
struct NotContainedError : PreconditionError {
  explicit NotContainedError(const std::string& what) : PreconditionError(what) {}
};

/// A configurable resource cap was hit.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Fringe enumeration exceeded its node cap; carries the partial count.
struct FringeCapError : ResourceLimitError {
  std::size_t nodes_enumerated;
  FringeCapError(const std::string& what, std::size_t count)
      : ResourceLimitError(what), nodes_enumerated(count) {}
};

/// Exhaustive sampling was asked for more states than the budget allows.
struct BudgetError : ResourceLimitError {
  explicit BudgetError(const std::string& what) : ResourceLimitError(what) {}
};

}  // namespace stallings

#endif
