#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace npb {

/// Dense element / point / arrow index.
using Index = std::int32_t;

enum class ErrorKind {
  InvalidInput,
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NonAssociative,
  OrderCapExceeded,
  ParentMismatch,
  NotNormal,
  NotGenerating,
  NotAnAction,
  NotAGroupoid,
  ActionNotFree,
  NotCompatible,
  NotFree,
  SplitFailure,
  NotTrivialized,
  NotMultiplicative,
  NotAnActionByAutomorphisms,
  PreconditionNotFree,
  DiagramFailure,
  InternalInconsistency,
  InternalDisagreement,
  FieldMismatch,
  SignatureMismatch,
  NotInvertible,
  IllegalMonomial,
  EnumerationCapExceeded,
  SearchCapExceeded,
  ActionIncompatibleWithFibration,
  NotInvertibleChart,
  NotACocycle,
  CapExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Thrown for invalid inputs and violated preconditions. Verdicts about
/// valid inputs are reported through result structs instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace npb
