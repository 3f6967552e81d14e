#pragma once

#include <stdexcept>
#include <string>

namespace aiforge {

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// The request is well-formed but exceeds a hard size bound.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

inline void require(bool cond, const char* what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace aiforge
