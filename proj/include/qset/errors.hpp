#ifndef QSET_ERRORS_HPP_
#define QSET_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group or set text. line/column are 1-based; 0 means unknown.
class SpecError : public Error {
 public:
  SpecError(std::string const& msg, std::size_t line, std::size_t column)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::string const& msg, std::size_t line, std::size_t column) {
    if (column == 0) return msg;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

// An operation was called outside its stated domain (empty set, non-subgroup, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A size cap (permutation closure, subgroup enumeration, census) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qset

#endif  // QSET_ERRORS_HPP_
