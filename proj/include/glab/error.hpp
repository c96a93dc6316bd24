#ifndef GLAB_ERROR_HPP
#define GLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace glab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (non-square matrix, unit not in
// the space, non-invariant set passed where invariance is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Tables that do not satisfy the groupoid axioms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Constructor input (a group, action or partial action) that is
// internally inconsistent.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Malformed instance file.  line/column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Input outside the supported class, e.g. a graph with a sink.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// Combinatorial explosion guard.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

}  // namespace glab

#endif  // GLAB_ERROR_HPP
