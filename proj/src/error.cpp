#include "npb/error.hpp"

namespace npb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotAGroupoid: return "NotAGroupoid";
    case ErrorKind::ActionNotFree: return "ActionNotFree";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::SplitFailure: return "SplitFailure";
    case ErrorKind::NotTrivialized: return "NotTrivialized";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::NotAnActionByAutomorphisms: return "NotAnActionByAutomorphisms";
    case ErrorKind::PreconditionNotFree: return "PreconditionNotFree";
    case ErrorKind::DiagramFailure: return "DiagramFailure";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::IllegalMonomial: return "IllegalMonomial";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::ActionIncompatibleWithFibration: return "ActionIncompatibleWithFibration";
    case ErrorKind::NotInvertibleChart: return "NotInvertibleChart";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

}  // namespace npb
