#include "framelab/errors.hpp"

namespace framelab {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Type: return "type";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::UnknownConstant: return "unknown-constant";
    case ErrorKind::TypeMismatch: return "type-mismatch";
    case ErrorKind::FamilyMismatch: return "family-mismatch";
    case ErrorKind::MismatchedSpaces: return "mismatched-spaces";
    case ErrorKind::NotMonotone: return "not-monotone";
    case ErrorKind::NoSuchElement: return "no-such-element";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::MissingConstantInterpretation: return "missing-constant-interpretation";
    case ErrorKind::ModelConditionFailed: return "model-condition-failed";
    case ErrorKind::PreconditionFailed: return "precondition-failed";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace framelab
