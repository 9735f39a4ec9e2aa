#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regcat {

enum class Errc {
  MissingAssignment,
  DuplicateAssignment,
  UnknownLabel,
  DuplicateLabel,
  TypeMismatch,
  SubsetDomainMismatch,
  NoInverseExists,
  SearchSpaceTooLarge,
  NotAnInnerInverse,
  NotAGeneralizedInverse,
  AlternationViolation,
  OrderMismatch,
  BrokenPath,
  UnknownObject,
  IncompatibleEdgeMap,
  NotIdempotent,
  CarrierTooLarge,
  SyntaxError,
  UnknownReference,
  DuplicateName,
  NotTotal,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library. `detail` names the offending
/// label, object, index or location.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace regcat
