#pragma once

#include <stdexcept>
#include <string>

namespace alphatree {

// Caller supplied something outside an operation's domain (bad lengths,
// probabilities that do not sum to one, index ranges, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// An internal guarantee failed: a constructed code is infeasible, a bound
// proved to hold was violated, a fold produced an invalid tree. Always a bug.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace alphatree
