#include "blockpos/error.hpp"

namespace blockpos {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::EigFailure: return "EigFailure";
    case ErrorCode::SingularBlock: return "SingularBlock";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::BlockOutOfRange: return "BlockOutOfRange";
    case ErrorCode::RejectedFullBlock: return "RejectedFullBlock";
    case ErrorCode::FlagMismatch: return "FlagMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NotConjugateEquivariant: return "NotConjugateEquivariant";
    case ErrorCode::NonRealValue: return "NonRealValue";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::NonHermitianOutput: return "NonHermitianOutput";
    case ErrorCode::NonLinearFunction: return "NonLinearFunction";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroW: return "ZeroW";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::DomainLacksZero: return "DomainLacksZero";
    case ErrorCode::EpsTooLarge: return "EpsTooLarge";
    case ErrorCode::NonPositiveEntries: return "NonPositiveEntries";
    case ErrorCode::CNotOutside: return "CNotOutside";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FactorizationMismatch: return "FactorizationMismatch";
  }
  return "Unknown";
}

}  // namespace blockpos
