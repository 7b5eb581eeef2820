#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conekit {

enum class ErrorCode {
  DimensionMismatch,
  Degenerate,
  WrongSignature,
  NotPositive,
  ZeroVector,
  BoundaryInput,
  NotIsotropic,
  EqualCenters,
  ProportionalInputs,
  FormNotPreserved,
  WrongConeComponent,
  PreconditionViolated,
  NotPointed,
  StabilizerNontrivial,
  BudgetExceeded,
  NotSupporting,
  NotNegativeDefinite,
  EmptySupport,
  InvalidFixture,
  MalformedInput,
  Internal,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace conekit
