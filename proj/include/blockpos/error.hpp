#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockpos {

enum class ErrorCode {
  NonSquare,
  AsymmetricInput,
  NonFiniteEntry,
  DimensionMismatch,
  DimensionTooLarge,
  EigFailure,
  SingularBlock,
  InvalidPermutation,
  BlockOutOfRange,
  RejectedFullBlock,
  FlagMismatch,
  OutOfDomain,
  NegativeCoefficient,
  NotConjugateEquivariant,
  NonRealValue,
  RegimeMismatch,
  NonHermitianOutput,
  NonLinearFunction,
  ZeroVector,
  ZeroW,
  NotPsd,
  DomainLacksZero,
  EpsTooLarge,
  NonPositiveEntries,
  CNotOutside,
  InvalidArgument,
  ConfigError,
  ParseError,
  FactorizationMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this exception; code() is the
/// stable machine-readable part, what() carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blockpos
