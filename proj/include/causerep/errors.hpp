#pragma once

#include <stdexcept>
#include <string>

namespace causerep {

enum class ErrorKind {
  ArityMismatch,
  ConflictingTag,
  Syntax,
  UnknownPredicate,
  NotBoolean,
  NotEndogenous,
  NotInInstance,
  QueryNotSatisfied,
  ObservationAbsent,
  InconsistentPackage,
  PartitionedInstance,
  ResourceExceeded,
  BudgetExceeded,
  BadArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown when an enumeration exceeds its node cap. Callers that set a cap
// must be prepared for partial work being discarded; no truncated results
// are ever returned.
class ResourceExceeded : public Error {
 public:
  explicit ResourceExceeded(const std::string& message) : Error(ErrorKind::ResourceExceeded, message) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::Syntax, message + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace causerep
