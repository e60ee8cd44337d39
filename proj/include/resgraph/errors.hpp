// errors.hpp
// Exception types. Each maps onto one CLI exit status.

#ifndef RESGRAPH_ERRORS_HPP
#define RESGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text; carries the 1-based line number (0 if not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The graph failed validation (not negative definite, disconnected, ...).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A theorem's hypotheses are not met; `hypothesis()` names the missing one.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : Error("hypothesis not satisfied: " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A structural fact guaranteed by the theory failed to hold. Seeing this
/// means either a bug or an input that slipped past validation.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed the configured safety limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace resgraph

#endif  // RESGRAPH_ERRORS_HPP
