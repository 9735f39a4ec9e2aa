#include "regcat/error.hpp"

namespace regcat {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MissingAssignment: return "MissingAssignment";
    case Errc::DuplicateAssignment: return "DuplicateAssignment";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::SubsetDomainMismatch: return "SubsetDomainMismatch";
    case Errc::NoInverseExists: return "NoInverseExists";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::NotAnInnerInverse: return "NotAnInnerInverse";
    case Errc::NotAGeneralizedInverse: return "NotAGeneralizedInverse";
    case Errc::AlternationViolation: return "AlternationViolation";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::BrokenPath: return "BrokenPath";
    case Errc::UnknownObject: return "UnknownObject";
    case Errc::IncompatibleEdgeMap: return "IncompatibleEdgeMap";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::CarrierTooLarge: return "CarrierTooLarge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownReference: return "UnknownReference";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::NotTotal: return "NotTotal";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, std::string detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace regcat
