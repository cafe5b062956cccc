#include "wlcc/errors.hpp"

namespace wlcc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::MissingModulus: return "MissingModulus";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::NotInverseClosed: return "NotInverseClosed";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotCoherent: return "NotCoherent";
    case ErrorKind::NoPairOfColor: return "NoPairOfColor";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InapplicableQ: return "InapplicableQ";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::HasFixedPoint: return "HasFixedPoint";
    case ErrorKind::SpecParseError: return "SpecParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

bool is_resource_cap(ErrorKind kind) {
  return kind == ErrorKind::SizeCap || kind == ErrorKind::GroupTooLarge ||
         kind == ErrorKind::IterationCapExceeded;
}

}  // namespace wlcc
