#pragma once

#include <stdexcept>
#include <string>

namespace symmcomb {

/// Malformed or out-of-domain input (bad Cartan datum, invalid diagram,
/// weight outside the required lattice). The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed identity or invariant did not hold. Exit code 1.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured enumeration cap was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symmcomb
