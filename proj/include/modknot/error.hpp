#pragma once

#include <stdexcept>
#include <string>

namespace modknot {

/// Malformed textual input (bad letters, unparsable integers, wrong shape).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well-formed but violates a mathematical precondition
/// (non-hyperbolic matrix, definite form, equivalent words, ...).
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// A result that the mathematics guarantees failed to materialize.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace modknot
