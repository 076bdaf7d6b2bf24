#pragma once

#include <stdexcept>
#include <string>

namespace immdec {

/* Error taxonomy: input_error covers everything caused by user-supplied data
 * (the CLI maps it to exit code 2); logic_error is reserved for internal
 * invariant breaks and is never expected to fire. */

class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Valid data, but outside the scope the decision procedure covers.
class scope_error : public input_error {
 public:
  explicit scope_error(const std::string& what) : input_error(what) {}
};

// Well-formed data the solver cannot handle (e.g. nonlinear fiber
// differential below the degree bound the algorithm needs).
class unsupported_error : public input_error {
 public:
  explicit unsupported_error(const std::string& what) : input_error(what) {}
};

}  // namespace immdec
