#pragma once

#include <stdexcept>
#include <string>

namespace framelab {

// Every failure the library can signal deliberately.  The CLI maps kinds to
// exit codes: configuration and input problems exit 2, blown budgets exit 3.
// Checked-but-failed certifications are ordinary return values, not errors.
enum class ErrorKind {
  Syntax,
  Type,
  UnboundVariable,
  UnknownConstant,
  TypeMismatch,
  FamilyMismatch,
  MismatchedSpaces,
  NotMonotone,
  NoSuchElement,
  BudgetExceeded,
  MissingConstantInterpretation,
  ModelConditionFailed,
  PreconditionFailed,
  Usage,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace framelab
