#pragma once

#include <stdexcept>
#include <string>

namespace qmt {

/// Two operands describe registers of different width.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Born-rule measurement requested on a zero-norm state.
class UnmeasurableState : public std::runtime_error {
 public:
  explicit UnmeasurableState(const std::string& what) : std::runtime_error(what) {}
};

/// No finite noise level yields the requested fidelity.
class UnreachableFidelity : public std::domain_error {
 public:
  explicit UnreachableFidelity(const std::string& what) : std::domain_error(what) {}
};

/// Argument outside the domain a special function is defined for here.
class OutOfDomain : public std::domain_error {
 public:
  explicit OutOfDomain(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qmt
