#ifndef LIFTCOVER_ERRORS_HPP
#define LIFTCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liftcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of vectors/matrices do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed text or JSON. `where` is a JSON pointer when available.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string where = "")
      : Error(where.empty() ? message : where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Well-formed input that violates a mathematical precondition
// (body not S-free, degenerate map, unbounded polytope, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A verdict that only holds on a finite search window, where an exact
// answer was required.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace liftcover

#endif
