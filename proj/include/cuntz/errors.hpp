#ifndef CUNTZ_ERRORS_HPP
#define CUNTZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cuntz {

struct CuntzError : std::runtime_error {
  explicit CuntzError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyWordError : CuntzError {
  EmptyWordError() : CuntzError("cannot split the empty word") {}
};

struct LevelTooSmallError : CuntzError {
  explicit LevelTooSmallError(const std::string& msg) : CuntzError(msg) {}
};

// A candidate code fails to be a partition of unity: either two words
// overlap (one a prefix of the other, or duplicated) or the union of
// cylinders misses part of the space.
struct NotAPartitionError : CuntzError {
  std::string side;     // "left" (range words) or "right" (domain words)
  std::string witness;  // offending or missing word, rendered
  NotAPartitionError(std::string side_, std::string witness_, const std::string& what_)
      : CuntzError(what_), side(std::move(side_)), witness(std::move(witness_)) {}
};

struct CoefficientNotOneError : CuntzError {
  explicit CoefficientNotOneError(const std::string& msg) : CuntzError(msg) {}
};

struct NotInRestrictedClassError : CuntzError {
  explicit NotInRestrictedClassError(const std::string& msg) : CuntzError(msg) {}
};

struct NotDiagonalAutomorphismError : CuntzError {
  explicit NotDiagonalAutomorphismError(const std::string& msg) : CuntzError(msg) {}
};

struct BudgetExceededError : CuntzError {
  explicit BudgetExceededError(const std::string& msg) : CuntzError(msg) {}
};

struct InfeasibleSizeError : CuntzError {
  explicit InfeasibleSizeError(const std::string& msg) : CuntzError(msg) {}
};

struct ParseError : CuntzError {
  int line;
  ParseError(int line_, const std::string& msg)
      : CuntzError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Thrown on internal consistency violations that indicate an engine bug,
// never a mathematical possibility.
struct InternalError : CuntzError {
  explicit InternalError(const std::string& msg) : CuntzError("internal: " + msg) {}
};

}  // namespace cuntz

#endif
