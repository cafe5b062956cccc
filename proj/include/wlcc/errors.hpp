#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wlcc {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  MissingModulus,
  SizeCap,
  NotClosed,
  MissingIdentity,
  NotInverseClosed,
  NotTransitive,
  OutOfRange,
  GroupTooLarge,
  InvalidConfiguration,
  IterationCapExceeded,
  SizeMismatch,
  Disconnected,
  NotCoherent,
  NoPairOfColor,
  DegreeMismatch,
  InapplicableQ,
  NotAutomorphism,
  HasFixedPoint,
  SpecParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// True for the kinds that signal an exhausted size or iteration budget.
bool is_resource_cap(ErrorKind kind);

}  // namespace wlcc
