#ifndef MCDEFORM_ERRORS_HPP
#define MCDEFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcdeform {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Block or vector dimensions disagree with the declared graded structure.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A polynomial form would exceed the configured degree bound.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A proposed twist does not satisfy the Maurer-Cartan equation.
class NotMC : public Error {
 public:
  NotMC(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Input document could not be parsed. Line and column are 1-based; zero
/// when the problem is semantic rather than syntactic.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace mcdeform

#endif  // MCDEFORM_ERRORS_HPP
