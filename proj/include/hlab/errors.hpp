#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlab {

/// Input outside an operation's declared domain (bad parameter, wrong term kind,
/// too few terms, unknown identifier).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic on two polynomials in different variables.
class VariableMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Syntax error in one of the text grammars; `position` is a 0-based byte offset.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised by the recurrence fitter when the Hankel determinant of `order` vanishes.
class ZeroHankelMinor : public std::runtime_error {
 public:
  explicit ZeroHankelMinor(std::size_t order)
      : std::runtime_error("Hankel determinant of order " + std::to_string(order) + " vanishes"),
        order_(order) {}
  std::size_t order() const noexcept { return order_; }

 private:
  std::size_t order_;
};

/// Internal invariant violated (e.g. an exact division left a remainder).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hlab
