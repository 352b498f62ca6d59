#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binvar {

enum class ErrorKind {
  MalformedElf,
  UnsupportedArch,
  DisassemblyGap,
  LengthMismatch,
  OutOfFunctionRange,
  UnknownFunction,
  OpaqueFunction,
  InfeasiblePlan,
  BudgetTooSmall,
  PoolExhausted,
  NoPlaceholder,
  PayloadTooLarge,
  EmptyFunction,
  OracleUnavailable,
  ProtocolViolation,
  Timeout,
  EmptyImage,
  EmptyDistribution,
  MissingLinkage,
  TrapUnsupported,
  StackOverflow,
  StepLimit,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI error manifest) can branch on it without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace binvar
